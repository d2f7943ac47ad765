import logging
import os
import sys

from chaoslink.database import ResultsDatabase
from chaoslink.pipeline.pipeline import Pipeline
from chaoslink.pipeline.pipeline_config import PipelineConfig
from chaoslink.setup import (apply_file_config, configure_logging, create_parser, generate_logfile_path,
                             read_file_config, set_log_levels)
from chaoslink.utilities import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, EXIT_SUCCESS, INPUT_ERRORS, get_version

__all__ = ["main"]

def _load_file_config(options):
    if options.config_file is None:
        return read_file_config()
    if not os.path.isfile(options.config_file):
        raise IOError("Configuration file {} does not exist".format(options.config_file))
    conf_dir, conf_file = os.path.split(os.path.abspath(options.config_file))
    return read_file_config(conf_file, conf_dir)

def main(argv=None):
    """Run the chaoslink command line.

    Parameters
    ----------
    argv : list[str], optional
        The arguments, sys.argv[1:] by default.

    Returns
    -------
    int
        0 on success, 2 for bad input (arguments, images, key files, settings), 1 for a failure
        inside the pipeline.
    """
    parser = create_parser()
    options = parser.parse_args(argv)

    console_detail, file_detail = set_log_levels(options.verbose)
    configure_logging(console_detail, file_detail, generate_logfile_path(options.log_path, options.command))
    log = logging.getLogger("pipeline.driver")
    arguments = argv if argv is not None else sys.argv[1:]
    log.debug("chaoslink {} command line: {}".format(get_version(), " ".join(arguments)))

    try:
        file_config = _load_file_config(options)
        if file_config is not None:
            apply_file_config(file_config, options)

        database = None
        if options.track:
            db_path = options.db_path if options.db_path is not None \
                else ResultsDatabase.default_path(options.log_path)
            database = ResultsDatabase(db_path)
            log.info("Tracking results in {}".format(database.db_file))

        if options.command == "rerun":
            Pipeline.rerun(options.manifest, database)
        else:
            Pipeline(PipelineConfig.from_options(options), database).run(options.command)
    except INPUT_ERRORS as err:
        log.error("Input error: {}".format(err))
        return EXIT_INPUT_ERROR
    except Exception as err:
        log.exception("Pipeline failure: {}".format(err))
        return EXIT_INTERNAL_ERROR

    return EXIT_SUCCESS
