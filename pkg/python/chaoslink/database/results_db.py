from datetime import datetime
import logging
import os

from sqlalchemy import MetaData, create_engine, exc

from chaoslink.database import tables
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import ResultsDatabaseError, expand_path, get_hostname, get_user, get_version

__all__ = ["DEFAULT_DB_NAME", "ResultsDatabase"]

DEFAULT_DB_NAME = "chaoslink_results.db"

class ResultsDatabase(object):
    """Tracks pipeline results in a SQLite database.

    Attributes
    ----------
    db_file : str
        The database file.
    metadata : sqlalchemy.MetaData
        The instance for holding the relevant tables.
    engine : sqlalchemy.engine.Engine
        The instance of the database engine.
    session_id : int
        The Id of the most recent tracked run, -1 before the first.
    """

    def __init__(self, db_file):
        """Initialize the class.

        Parameters
        ----------
        db_file : str
            The SQLite database file. It is created with its tables when missing.
        """
        self.log = logging.getLogger("database.ResultsDatabase")
        self.db_file = expand_path(db_file)
        self.session_id = -1
        self.metadata = MetaData()
        self.session = tables.create_session(self.metadata)
        self.link_result = tables.create_link_result(self.metadata)
        self.randomness_result = tables.create_randomness_result(self.metadata)
        self.lyapunov_result = tables.create_lyapunov_result(self.metadata)
        self.engine = create_engine("sqlite:///{}".format(self.db_file))

    @classmethod
    def default_path(cls, log_path):
        """str: The database file in the log directory, or the running directory when it is missing.
        """
        if not os.path.exists(log_path):
            log_path = ""
        return os.path.join(log_path, DEFAULT_DB_NAME)

    def create_db(self):
        """Create the database tables that do not exist yet.
        """
        try:
            self.metadata.create_all(self.engine)
        except exc.SQLAlchemyError as err:
            raise ResultsDatabaseError("Cannot create tables in {}: {}".format(self.db_file, err))

    def _insert(self, table, rows):
        if not rows:
            return
        self.log.log(LoggingLevel.EXTENSIVE.value, "Writing {} rows into {}.".format(len(rows), table.name))
        try:
            with self.engine.begin() as conn:
                conn.execute(table.insert(), rows)
        except exc.SQLAlchemyError as err:
            self.log.error("Database insertion failed for {}!".format(table.name))
            raise ResultsDatabaseError(str(err))

    def new_session(self, command, config):
        """Log a new tracked run and return its Id.

        Parameters
        ----------
        command : str
            The pipeline command.
        config : :class:`.PipelineConfig`
            The resolved settings of the run.

        Returns
        -------
        int
            The session Id for this run.
        """
        self.create_db()
        row = tables.write_session(get_user(), get_hostname(), datetime.utcnow(), get_version(), command,
                                   config.to_items())
        try:
            with self.engine.begin() as conn:
                result = conn.execute(self.session.insert().values(**row))
                self.session_id = int(result.inserted_primary_key[0])
        except exc.SQLAlchemyError as err:
            raise ResultsDatabaseError("Cannot log a new session: {}".format(err))
        self.log.debug("Tracking {} as session {}".format(command, self.session_id))
        return self.session_id

    def write_link_reports(self, session_id, reports):
        """Store the reports of a transmit or ber-sweep run.

        Parameters
        ----------
        session_id : int
            The tracked run.
        reports : list[:class:`.LinkReport`]
            One report per SNR point.
        """
        self._insert(self.link_result, [tables.write_link_result(r, i, session_id)
                                        for i, r in enumerate(reports)])

    def write_randomness_results(self, session_id, image_name, results):
        """Store the randomness suite of an analyze run.
        """
        self._insert(self.randomness_result, [tables.write_randomness_result(r, i + 1, image_name, session_id)
                                              for i, r in enumerate(results)])

    def write_lyapunov_result(self, session_id, report):
        self._insert(self.lyapunov_result, [tables.write_lyapunov_result(report, session_id)])

    def fetch(self, table_name, session_id=None):
        """Read rows back from one table.

        Parameters
        ----------
        table_name : str
            The attribute holding the table: session, link_result, randomness_result or
            lyapunov_result.
        session_id : int, optional
            Restrict the rows to one tracked run.

        Returns
        -------
        list[dict]
        """
        tbl = getattr(self, table_name)
        select = tbl.select()
        if session_id is not None:
            column = tbl.c.sessionId if table_name == "session" else tbl.c.Session_sessionId
            select = select.where(column == session_id)
        with self.engine.connect() as conn:
            return [dict(row._mapping) for row in conn.execute(select)]
