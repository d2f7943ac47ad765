import argparse

from chaoslink import __version__

__all__ = ["create_parser"]

MAPPING_CHOICES = ("qpsk", "psk16")
LAYOUT_CHOICES = ("interleaved", "concatenated")
KIND_CHOICES = ("lyapunov", "bifurcation", "trajectory")
PARAM_CHOICES = ("a", "b", "c", "d", "e", "r", "g")

COMMAND_HELP = [
    ("encrypt", "Encrypt an 8-bit PGM image and write the cipher image plus its key file."),
    ("decrypt", "Decrypt a cipher image with its key file."),
    ("transmit", "Send a cipher image over the OFDM link at one or more SNR values and decrypt "
                 "what arrives."),
    ("ber-sweep", "Measure the bit error rate over an SNR grid."),
    ("analyze", "Write the histogram, entropy, chi-square and randomness suite results of an image."),
    ("dynamics", "Write Lyapunov, bifurcation or trajectory data of the hyperchaotic system."),
]

def _add_common_arguments(parser):
    log_group_descr = ["This group of arguments controls the logging of the application."]
    logging = parser.add_argument_group("logging", " ".join(log_group_descr))
    logging.add_argument("-l", "--log-path", dest="log_path", default="log",
                         help="Set the path to write log files for the application. If it does not exist, "
                         "the log file is written in the running directory.")
    logging.add_argument("-v", "--verbose", dest="verbose", action='count', default=0,
                         help="Set the verbosity for the console and file logging. Default is to log nothing "
                         "to the console and debug to the log file. More than two levels are ignored for the "
                         "console and more than five are ignored for the log file.")

    tracking_group_descr = ["This group of arguments controls the tracking of results in a database."]
    track_grp = parser.add_argument_group("tracking", " ".join(tracking_group_descr))
    track_grp.add_argument("-t", "--track", dest="track", action="store_const", const=True, default=None,
                           help="Flag to record the run results in the tracking database.")
    track_grp.add_argument("--db-path", dest="db_path", default=None,
                           help="The SQLite tracking database file. Default is chaoslink_results.db in "
                           "the log path.")

    config_group_descr = ["This group of arguments controls the program configuration."]
    conf_grp = parser.add_argument_group("config", " ".join(config_group_descr))
    conf_grp.add_argument("--config-file", dest="config_file", default=None,
                          help="A program configuration file. Default is $HOME/.config/chaoslink when it "
                          "exists. Command-line flags override the file.")

def _add_pipeline_arguments(parser):
    input_group_descr = ["This group of arguments names the input files."]
    input_grp = parser.add_argument_group("input", " ".join(input_group_descr))
    input_grp.add_argument("--image", dest="image", default=None,
                           help="The input image, an 8-bit binary PGM (P5) file.")
    input_grp.add_argument("--key", dest="key", default=None,
                           help="The key file. encrypt writes it (default <out-dir>/<image stem>.key), the "
                           "other commands read it.")
    input_grp.add_argument("--reference", dest="reference", default=None,
                           help="A reference image for PSNR measurements.")

    cipher_group_descr = ["This group of arguments controls the image cipher. Unset values come from the "
                          "configuration file or the built-in defaults."]
    cipher_grp = parser.add_argument_group("cipher", " ".join(cipher_group_descr))
    cipher_grp.add_argument("--rounds", dest="rounds", type=int, default=None,
                            help="Number of permutation-diffusion rounds (built-in 4).")
    cipher_grp.add_argument("--n0", dest="n0", type=int, default=None,
                            help="Integration steps discarded before the keystream (built-in 1000). "
                                 "At 1000 a tiny key change has not spread yet; use about 40000 "
                                 "for full key sensitivity.")
    cipher_grp.add_argument("--q-exp", dest="q_exponent", type=int, default=None,
                            help="Even power of the Fibonacci Q-matrix (built-in 20).")
    cipher_grp.add_argument("--step", dest="step_size", type=float, default=None,
                            help="RK4 step size of the keystream generator (built-in 0.001).")
    cipher_grp.add_argument("--layout", dest="layout", choices=LAYOUT_CHOICES, default=None,
                            help="How the x1, x3 and x5 sequences form the keystream (built-in interleaved).")
    cipher_grp.add_argument("--literal-key", dest="literal_key", action="store_const", const=True,
                            default=None,
                            help="Derive round keys with the literal 2^(8 (M^2 + N)) denominator.")

    ofdm_group_descr = ["This group of arguments controls the OFDM modem and channel."]
    ofdm_grp = parser.add_argument_group("ofdm", " ".join(ofdm_group_descr))
    ofdm_grp.add_argument("--fft-len", dest="fft_length", type=int, default=None,
                          help="Number of subcarriers, a power of two (built-in 1024).")
    ofdm_grp.add_argument("--cp-len", dest="cp_length", type=int, default=None,
                          help="Cyclic prefix length in samples (built-in 256).")
    ofdm_grp.add_argument("--mapping", dest="mapping", choices=MAPPING_CHOICES, default=None,
                          help="Constellation (built-in qpsk).")
    ofdm_grp.add_argument("--snr", dest="snr_db", type=float, default=None,
                          help="Channel SNR in dB, inf for a noiseless channel (built-in 20).")
    ofdm_grp.add_argument("--snr-grid", dest="snr_grid", type=float, nargs="+", default=None,
                          help="Strictly increasing SNR values in dB (ber-sweep built-in 5 10 20 30).")
    ofdm_grp.add_argument("--seed", dest="seed", type=int, default=None,
                          help="Master seed of the channel noise (built-in 0).")
    ofdm_grp.add_argument("--dump-samples", dest="dump_samples", action="store_const", const=True,
                          default=None, help="Write the constellation and time samples of the first OFDM "
                          "symbol.")

    dynamics_group_descr = ["This group of arguments controls the dynamics command."]
    dyn_grp = parser.add_argument_group("dynamics", " ".join(dynamics_group_descr))
    dyn_grp.add_argument("--kind", dest="kind", choices=KIND_CHOICES, default=None,
                         help="The data to produce (built-in lyapunov).")
    dyn_grp.add_argument("--param", dest="param", choices=PARAM_CHOICES, default=None,
                         help="The system coefficient swept by the bifurcation scan (built-in r).")
    dyn_grp.add_argument("--grid-start", dest="grid_start", type=float, default=None,
                         help="First value of the parameter grid (built-in 0).")
    dyn_grp.add_argument("--grid-stop", dest="grid_stop", type=float, default=None,
                         help="Last value of the parameter grid (built-in 10).")
    dyn_grp.add_argument("--grid-count", dest="grid_count", type=int, default=None,
                         help="Number of parameter grid values (built-in 101).")
    dyn_grp.add_argument("--transient", dest="transient", type=int, default=None,
                         help="Steps integrated before recording.")
    dyn_grp.add_argument("--total", dest="total", type=int, default=None,
                         help="Steps of a Lyapunov run (transient included) or of a trajectory.")
    dyn_grp.add_argument("--record", dest="record", type=int, default=None,
                         help="Steps searched for maxima at each bifurcation grid value.")

    output_group_descr = ["This group of arguments controls the outputs."]
    out_grp = parser.add_argument_group("output", " ".join(output_group_descr))
    out_grp.add_argument("--out-dir", dest="out_dir", default=None,
                         help="Directory receiving the output files (built-in output).")
    out_grp.add_argument("--workers", dest="workers", type=int, default=None,
                         help="Threads used across SNR points, grid values and randomness tests "
                         "(built-in 1).")

def create_parser():
    """Create the argument parser for the main driver script.
    """
    description = ["Encrypt grayscale images with a hyperchaotic permutation-diffusion cipher, send"]
    description.append("them over a simulated OFDM link and analyze the results.")

    parser = argparse.ArgumentParser(prog="chaoslink", usage="chaoslink <command> [options]",
                                     description=" ".join(description),
                                     formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name, help_text in COMMAND_HELP:
        sub = subparsers.add_parser(name, help=help_text, description=help_text,
                                    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        _add_pipeline_arguments(sub)
        _add_common_arguments(sub)

    rerun_help = "Repeat a run from its manifest file."
    rerun = subparsers.add_parser("rerun", help=rerun_help, description=rerun_help,
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    rerun.add_argument("--manifest", dest="manifest", required=True,
                       help="The <command>_manifest.ini file of the run to repeat.")
    _add_common_arguments(rerun)

    return parser
