import csv
import logging

__all__ = ["format_value", "write_ber_sweep", "write_bifurcation", "write_constellation", "write_csv",
           "write_histogram", "write_lyapunov", "write_lyapunov_history", "write_samples", "write_suite",
           "write_summary", "write_trajectory"]

log = logging.getLogger("pipeline.report_files")

def format_value(value):
    """Render a CSV cell. Floats keep full precision, None becomes an empty cell.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    return str(value)

def write_csv(filename, header, rows):
    """Write rows under a header line.

    Parameters
    ----------
    filename : str
        The output file.
    header : sequence of str
        The column names.
    rows : iterable of sequence
        The row values.
    """
    with open(filename, "w", newline="") as cfile:
        writer = csv.writer(cfile, lineterminator="\n")
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow([format_value(v) for v in row])
            count += 1
    log.debug("Wrote {} rows to {}".format(count, filename))

def write_histogram(filename, hist):
    write_csv(filename, ("value", "count"), ((value, int(count)) for value, count in enumerate(hist.counts)))

def write_suite(filename, results):
    """Write randomness test results as index,test_name,p_value,result rows.
    """
    write_csv(filename, ("index", "test_name", "p_value", "result"),
              ((i + 1, r.title, r.p_value, r.status.value) for i, r in enumerate(results)))

def write_summary(filename, metrics):
    write_csv(filename, ("metric", "value"), metrics.items())

def write_ber_sweep(filename, reports):
    write_csv(filename, ("snr_db", "total_bits", "bit_errors", "ber", "psnr_db"),
              ((r.snr_db, r.total_bits, r.bit_errors, r.ber, r.psnr_db) for r in reports))

def write_lyapunov(filename, report):
    write_csv(filename, ("index", "exponent"),
              ((i + 1, float(v)) for i, v in enumerate(report.exponents)))

def write_lyapunov_history(filename, report):
    write_csv(filename, ("time", "l1", "l2", "l3", "l4", "l5", "l6"),
              ([float(v) for v in row] for row in report.history))

def write_bifurcation(filename, scan):
    """Write one param_value,xmax row per recorded maximum.
    """
    def rows():
        for value, maxima in zip(scan.grid, scan.maxima):
            for xmax in maxima:
                yield float(value), float(xmax)
    write_csv(filename, ("param_value", "xmax"), rows())

def write_trajectory(filename, trajectory):
    write_csv(filename, ("step", "x1", "x2", "x3", "x4", "x5", "x6"),
              ([i + 1] + [float(v) for v in row] for i, row in enumerate(trajectory)))

def write_constellation(filename, symbols):
    write_csv(filename, ("re", "im"), ((float(s.real), float(s.imag)) for s in symbols))

def write_samples(filename, times, samples):
    write_csv(filename, ("t", "re", "im"),
              ((float(t), float(s.real), float(s.imag)) for t, s in zip(times, samples)))
