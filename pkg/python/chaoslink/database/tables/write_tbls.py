import collections
import math

__all__ = ["write_link_result", "write_lyapunov_result",
           "write_randomness_result", "write_session"]

def write_session(user, host, date, version, command, config_items):
    """Create a dictionary of data for the Session table.

    Parameters
    ----------
    user : str
        The username of the runner.
    host : str
        The hostname of the running computer.
    date : datetime.datetime
        The UTC start of the run.
    version : str
        The pipeline version.
    command : str
        The pipeline command.
    config_items : list[(str, str)]
        The resolved settings in text form.

    Returns
    -------
    collections.OrderedDict
    """
    values = collections.OrderedDict([
        ('sessionUser', user),
        ('sessionHost', host),
        ('sessionDate', date),
        ('version', version),
        ('command', command),
        ('configText', "; ".join("{}={}".format(k, v) for k, v in config_items))
    ])

    return values

def write_link_result(data, index, sid):
    """Create a dictionary of data for the LinkResult table.

    Parameters
    ----------
    data : :class:`.LinkReport`
        The report of one SNR point.
    index : int
        The position of the point in the grid.
    sid : int
        The current session ID.

    Returns
    -------
    collections.OrderedDict
    """
    psnr = data.psnr_db
    if psnr is not None and math.isinf(psnr):
        # identical images are stored with a NULL psnr
        psnr = None
    values = collections.OrderedDict([
        ('linkResultId', index),
        ('Session_sessionId', sid),
        ('snr', data.snr_db),
        ('totalBits', data.total_bits),
        ('bitErrors', data.bit_errors),
        ('ber', data.ber),
        ('psnr', psnr)
    ])

    return values

def write_randomness_result(data, index, image_name, sid):
    """Create a dictionary of data for the RandomnessResult table.

    Parameters
    ----------
    data : :class:`.TestResult`
        The outcome of one randomness test.
    index : int
        The position of the test in the report.
    image_name : str
        The analyzed image file stem.
    sid : int
        The current session ID.

    Returns
    -------
    collections.OrderedDict
    """
    values = collections.OrderedDict([
        ('randomnessResultId', index),
        ('Session_sessionId', sid),
        ('imageName', image_name),
        ('testName', data.name),
        ('pValue', data.p_value),
        ('passed', bool(data.passed)),
        ('status', data.status.value)
    ])

    return values

def write_lyapunov_result(data, sid):
    """Create a dictionary of data for the LyapunovResult table.

    Parameters
    ----------
    data : :class:`.LyapunovReport`
        The spectrum of a dynamics run.
    sid : int
        The current session ID.

    Returns
    -------
    collections.OrderedDict
    """
    exponents = [float(v) for v in data.exponents]
    values = collections.OrderedDict([
        ('Session_sessionId', sid),
        ('transientSteps', int(data.transient_steps)),
        ('totalSteps', int(data.total_steps))
    ])
    for i, value in enumerate(exponents):
        values["l{}".format(i + 1)] = value
    values["exponentSum"] = math.fsum(exponents)

    return values
