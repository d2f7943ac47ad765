from sqlalchemy import Boolean, Column, Float, ForeignKey, Index, Integer, String, Table
from sqlalchemy.types import DATETIME

__all__ = ["create_link_result", "create_lyapunov_result", "create_randomness_result", "create_session"]

def create_session(metadata):
    """Create Session table.

    Table Description:

    This table contains one row per tracked pipeline command. Runs are identified by the
    combination of the hostname and session Id: *sessionHost_sessionId*.

    Parameters
    ----------
    metadata : sqlalchemy.MetaData
        The database object that collects the tables.

    Returns
    -------
    sqlalchemy.Table
        The Session table object.
    """
    table = Table("Session", metadata,
                  Column("sessionId", Integer, primary_key=True, autoincrement=True, nullable=False,
                         doc="Numeric identifier for the tracked run."),
                  Column("sessionUser", String(80), nullable=False,
                         doc="Computer username of the pipeline runner."),
                  Column("sessionHost", String(80), nullable=False,
                         doc="Computer hostname where the pipeline was run."),
                  Column("sessionDate", DATETIME, nullable=False,
                         doc="The UTC date/time of the run start."),
                  Column("version", String(25), nullable=True,
                         doc="The version number of the pipeline code."),
                  Column("command", String(20), nullable=False, doc="The pipeline command that was run."),
                  Column("configText", String(2048), nullable=True,
                         doc="The resolved settings as name=value pairs separated by semicolons."))

    Index("s_host_user_date_idx", table.c.sessionUser, table.c.sessionHost, table.c.sessionDate)

    return table

def create_link_result(metadata):
    """Create LinkResult table.

    Table Description:

    This table contains the bit error count of every SNR point of a transmit or ber-sweep run.

    Parameters
    ----------
    metadata : sqlalchemy.MetaData
        The database object that collects the tables.

    Returns
    -------
    sqlalchemy.Table
        The LinkResult table object.
    """
    table = Table("LinkResult", metadata,
                  Column("linkResultId", Integer, primary_key=True, autoincrement=False, nullable=False,
                         doc="Position of the SNR point in the run grid."),
                  Column("Session_sessionId", Integer, ForeignKey("Session.sessionId"), primary_key=True,
                         autoincrement=False, nullable=False, doc="The tracked run session Id."),
                  Column("snr", Float, nullable=False, doc="The channel SNR (units=dB)."),
                  Column("totalBits", Integer, nullable=False, doc="Payload bits sent."),
                  Column("bitErrors", Integer, nullable=False, doc="Payload bits received wrong."),
                  Column("ber", Float, nullable=False, doc="The bit error rate."),
                  Column("psnr", Float, nullable=True,
                         doc="PSNR of the reconstructed image (units=dB), when the payload is an image."))

    Index("fk_LinkResult_Session", table.c.Session_sessionId)

    return table

def create_randomness_result(metadata):
    """Create RandomnessResult table.

    Table Description:

    This table contains the outcome of every randomness test run by an analyze command.

    Parameters
    ----------
    metadata : sqlalchemy.MetaData
        The database object that collects the tables.

    Returns
    -------
    sqlalchemy.Table
        The RandomnessResult table object.
    """
    table = Table("RandomnessResult", metadata,
                  Column("randomnessResultId", Integer, primary_key=True, autoincrement=False,
                         nullable=False, doc="Position of the test in the report."),
                  Column("Session_sessionId", Integer, ForeignKey("Session.sessionId"), primary_key=True,
                         autoincrement=False, nullable=False, doc="The tracked run session Id."),
                  Column("imageName", String(256), nullable=False, doc="The analyzed image file stem."),
                  Column("testName", String(64), nullable=False, doc="The randomness test."),
                  Column("pValue", Float, nullable=True, doc="The p-value, empty when inconclusive."),
                  Column("passed", Boolean, nullable=False, doc="Whether the p-value exceeds 0.01."),
                  Column("status", String(16), nullable=False,
                         doc="The verdict: Random, Non-random or Inconclusive."))

    Index("fk_RandomnessResult_Session", table.c.Session_sessionId)

    return table

def create_lyapunov_result(metadata):
    """Create LyapunovResult table.

    Table Description:

    This table contains the Lyapunov spectrum of a dynamics run.

    Parameters
    ----------
    metadata : sqlalchemy.MetaData
        The database object that collects the tables.

    Returns
    -------
    sqlalchemy.Table
        The LyapunovResult table object.
    """
    table = Table("LyapunovResult", metadata,
                  Column("Session_sessionId", Integer, ForeignKey("Session.sessionId"), primary_key=True,
                         autoincrement=False, nullable=False, doc="The tracked run session Id."),
                  Column("transientSteps", Integer, nullable=False,
                         doc="Steps integrated before the measurement."),
                  Column("totalSteps", Integer, nullable=False, doc="All integrated steps."),
                  Column("l1", Float, nullable=False, doc="The largest exponent."),
                  Column("l2", Float, nullable=False, doc="The second exponent."),
                  Column("l3", Float, nullable=False, doc="The third exponent."),
                  Column("l4", Float, nullable=False, doc="The fourth exponent."),
                  Column("l5", Float, nullable=False, doc="The fifth exponent."),
                  Column("l6", Float, nullable=False, doc="The smallest exponent."),
                  Column("exponentSum", Float, nullable=False, doc="Sum of the six exponents."))

    return table
