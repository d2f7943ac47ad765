from .base_tbls import *
from .write_tbls import *
