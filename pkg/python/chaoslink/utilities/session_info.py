import getpass
import os
import socket

from chaoslink import __version__

__all__ = ["get_hostname", "get_user", "get_version"]

def get_user():
    """Get the username from the environment.

    Returns
    -------
    str
        The username of the person running the pipeline.
    """
    user = os.getenv("USER")
    if user is None or user == "":
        user = getpass.getuser()
    return user

def get_hostname():
    """Get the hostname from the environment.

    The CHAOSLINK_HOSTNAME variable overrides the socket lookup, which is useful on
    batch clusters where the node name changes between runs.

    Returns
    -------
    str
        The short hostname of the running computer.
    """
    host = os.getenv("CHAOSLINK_HOSTNAME")
    if host is None or host == "":
        host = socket.gethostname()
    host = host.split('.')[0]
    return host

def get_version():
    """Get the version of the software.

    Returns
    -------
    str
    """
    return __version__
