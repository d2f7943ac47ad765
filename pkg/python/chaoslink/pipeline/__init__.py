"""
Module for the command-line pipeline: image and report files, run configuration, run
manifests and the commands chaining the cipher, the modem and the analysis.
"""
from .image_files import *
from .report_files import *
from .pipeline_config import *
from .run_manifest import *
from .pipeline import *
from .driver import *
