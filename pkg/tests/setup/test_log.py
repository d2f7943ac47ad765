import logging
import os
import unittest
from unittest import mock

from chaoslink.setup import LoggingLevel, configure_logging, generate_logfile_path, set_log_levels

from tests.helpers import make_temp_dir, reset_logging

class LogTest(unittest.TestCase):

    def setUp(self):
        patcher1 = mock.patch("chaoslink.setup.log.get_hostname")
        self.addCleanup(patcher1.stop)
        self.mock_get_hostname = patcher1.start()
        self.hostname = "tester"
        self.mock_get_hostname.return_value = self.hostname
        patcher2 = mock.patch("chaoslink.setup.log.get_user")
        self.addCleanup(patcher2.stop)
        self.mock_get_user = patcher2.start()
        self.mock_get_user.return_value = "demouser"
        self.addCleanup(reset_logging)

    def test_logfile_creation_path_doesnt_exist(self):
        log_path = generate_logfile_path("no_such_log_dir")
        self.assertEqual(log_path, "tester_demouser_run.log")

    def test_logfile_generation_path_exists(self):
        log_dir = make_temp_dir(self)
        log_path = generate_logfile_path(log_dir, "encrypt")
        self.assertEqual(log_path, os.path.join(log_dir, "tester_demouser_encrypt.log"))

    def test_verbose_level_zero(self):
        console_detail, file_detail = set_log_levels(0)
        self.assertEqual(console_detail, 0)
        self.assertEqual(file_detail, 3)

    def test_verbose_level_two(self):
        console_detail, file_detail = set_log_levels(2)
        self.assertEqual(console_detail, 2)
        self.assertEqual(file_detail, 3)

    def test_verbose_level_four(self):
        console_detail, file_detail = set_log_levels(4)
        self.assertEqual(console_detail, 2)
        self.assertEqual(file_detail, 4)

    def test_verbose_level_six(self):
        console_detail, file_detail = set_log_levels(6)
        self.assertEqual(console_detail, 2)
        self.assertEqual(file_detail, 5)

    def test_configure_console_only(self):
        configure_logging(1, 3)
        self.assertEqual(len(logging.getLogger().handlers), 1)
        self.assertEqual(logging.getLogger().getEffectiveLevel(), logging.INFO)

    def test_configure_logging_with_file(self):
        log_file = os.path.join(make_temp_dir(self), "run.log")
        configure_logging(2, 4, log_file)
        handlers = logging.getLogger().handlers
        self.assertEqual(len(handlers), 2)
        self.assertEqual(logging.getLogger().getEffectiveLevel(), LoggingLevel.EXTENSIVE.value)
        self.assertIsInstance(handlers[-1], logging.FileHandler)
        logging.getLogger("tests.log").debug("Message for the file")
        handlers[-1].flush()
        with open(log_file) as lfile:
            self.assertIn("Message for the file", lfile.read())

    def test_repeated_configuration_replaces_handlers(self):
        configure_logging(0, 3)
        configure_logging(0, 3)
        self.assertEqual(len(logging.getLogger().handlers), 1)

    def test_extra_level_names(self):
        configure_logging(0, 3)
        self.assertEqual(logging.getLevelName(15), "WORDY")
        self.assertEqual(logging.getLevelName(2), "TRACE")
