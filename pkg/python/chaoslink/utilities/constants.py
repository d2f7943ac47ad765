__all__ = ["BYTE_LEVELS", "DEFAULT_BIFURCATION_RECORD", "DEFAULT_BIFURCATION_TRANSIENT",
           "DEFAULT_CP_LENGTH", "DEFAULT_FFT_LENGTH", "DEFAULT_GRID_COUNT", "DEFAULT_GRID_START",
           "DEFAULT_GRID_STOP", "DEFAULT_HISTORY_STRIDE", "DEFAULT_IMAGE_SIZE", "DEFAULT_LAYOUT",
           "DEFAULT_LYAPUNOV_INTERVAL", "DEFAULT_LYAPUNOV_TOTAL", "DEFAULT_LYAPUNOV_TRANSIENT",
           "DEFAULT_MAPPING", "DEFAULT_N0", "DEFAULT_OUTPUT_DIR", "DEFAULT_Q_EXPONENT", "DEFAULT_ROUNDS",
           "DEFAULT_SEED", "DEFAULT_SNR_DB", "DEFAULT_SNR_GRID", "DEFAULT_STEP_SIZE",
           "DEFAULT_TRAJECTORY_STEPS", "DEFAULT_WORKERS", "EXIT_INPUT_ERROR", "EXIT_INTERNAL_ERROR",
           "EXIT_SUCCESS", "KEY_FALLBACK_BASE", "KEY_FALLBACK_THRESHOLD", "KEY_SCALE",
           "SIGNIFICANCE_LEVEL"]

DEFAULT_STEP_SIZE = 0.001
"""Fixed RK4 step size for the hyperchaotic system"""
DEFAULT_LYAPUNOV_TRANSIENT = 10000
"""Steps integrated before the tangent frame is started"""
DEFAULT_LYAPUNOV_TOTAL = 200000
"""Total steps (transient included) of a Lyapunov spectrum run"""
DEFAULT_LYAPUNOV_INTERVAL = 10
"""Steps between re-orthonormalizations of the tangent frame"""
DEFAULT_BIFURCATION_TRANSIENT = 20000
"""Steps discarded at every bifurcation grid point"""
DEFAULT_BIFURCATION_RECORD = 20000
"""Steps searched for local maxima at every bifurcation grid point"""
DEFAULT_GRID_START = 0.0
"""Lower end of the default bifurcation grid over r"""
DEFAULT_GRID_STOP = 10.0
"""Upper end of the default bifurcation grid over r"""
DEFAULT_GRID_COUNT = 101
"""Number of points in the default bifurcation grid"""
DEFAULT_HISTORY_STRIDE = 100
"""Re-orthonormalizations between saved running Lyapunov estimates"""
DEFAULT_TRAJECTORY_STEPS = 50000
"""Steps written by a trajectory dump"""

DEFAULT_ROUNDS = 4
"""Number of permutation-diffusion rounds"""
DEFAULT_N0 = 1000
"""Integration steps discarded before the keystream is sampled"""
DEFAULT_Q_EXPONENT = 20
"""Power of the Fibonacci Q-matrix used for diffusion"""
BYTE_LEVELS = 256
"""Number of gray levels of an 8-bit pixel"""
KEY_SCALE = 2 ** 8
"""Byte range scale in the round key denominator"""
KEY_FALLBACK_THRESHOLD = 1.0e-12
"""Key components below this value are replaced by the fallback"""
KEY_FALLBACK_BASE = 0.123456789
"""Fallback key component, multiplied by the component index"""
DEFAULT_IMAGE_SIZE = (256, 256)
"""Height and width of the reference test image"""
DEFAULT_LAYOUT = "interleaved"
"""How the x1, x3 and x5 keystream sequences are combined"""

DEFAULT_FFT_LENGTH = 1024
"""Number of OFDM subcarriers"""
DEFAULT_CP_LENGTH = 256
"""Length of the cyclic prefix in samples"""
DEFAULT_MAPPING = "qpsk"
"""Default constellation"""
DEFAULT_SNR_DB = 20.0
"""Default signal-to-noise ratio in dB over time-domain samples"""
DEFAULT_SNR_GRID = (5.0, 10.0, 20.0, 30.0)
"""Default signal-to-noise ratio grid for BER sweeps"""
DEFAULT_SEED = 0
"""Default master seed for channel noise"""

SIGNIFICANCE_LEVEL = 0.01
"""Significance level of the randomness tests"""

DEFAULT_OUTPUT_DIR = "output"
"""Directory receiving the pipeline output files"""
DEFAULT_WORKERS = 1
"""Threads used by sweeps and scans"""

EXIT_SUCCESS = 0
"""Exit code for a successful command"""
EXIT_INTERNAL_ERROR = 1
"""Exit code for a failure inside the pipeline"""
EXIT_INPUT_ERROR = 2
"""Exit code for bad arguments or input files"""
