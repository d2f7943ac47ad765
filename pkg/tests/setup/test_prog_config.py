import configparser
import os
import unittest
from unittest import mock

from chaoslink.setup import (apply_file_config, create_parser, format_option, parse_option, read_file_config,
                             write_file_config)
from chaoslink.utilities import ConfigurationError

from tests.helpers import make_temp_dir

class ProgConfigTest(unittest.TestCase):

    def setUp(self):
        self.config_dir = make_temp_dir(self)
        sample_config = """
[cipher]
rounds = 2
n0 = 40000
layout = concatenated

[channel]
snr_grid = 0, 5.5, 10
seed = 7

[tracking]
track = yes
        """
        self.config_file = "chaoslink_testing"
        with open(os.path.join(self.config_dir, self.config_file), 'w') as cfile:
            cfile.write(sample_config)
        self.parser = create_parser()

    def test_read_file(self):
        config = read_file_config(self.config_file, self.config_dir)
        self.assertEqual(config.get("cipher", "rounds"), "2")
        self.assertEqual(config.get("channel", "seed"), "7")

    def test_read_no_file(self):
        self.assertIsNone(read_file_config("missing_chaoslink", self.config_dir))
        self.assertIsNone(read_file_config(None, self.config_dir))

    def test_read_file_no_config_dir(self):
        os.mkdir(os.path.join(self.config_dir, ".config"))
        os.rename(os.path.join(self.config_dir, self.config_file),
                  os.path.join(self.config_dir, ".config", "chaoslink"))
        with mock.patch.dict('os.environ', {"HOME": self.config_dir}):
            config = read_file_config()
        self.assertEqual(config.get("cipher", "n0"), "40000")

    def test_read_file_section_no_option(self):
        config = read_file_config(self.config_file, self.config_dir)
        with self.assertRaises(configparser.NoOptionError):
            config.get("cipher", "q_exponent")

    def test_option_override(self):
        config = read_file_config(self.config_file, self.config_dir)
        options = self.parser.parse_args(["encrypt", "--rounds", "3"])
        apply_file_config(config, options)
        self.assertEqual(options.rounds, 3)
        self.assertEqual(options.n0, 40000)
        self.assertEqual(options.layout, "concatenated")
        self.assertEqual(options.snr_grid, (0.0, 5.5, 10.0))
        self.assertEqual(options.seed, 7)
        self.assertTrue(options.track)
        self.assertIsNone(options.q_exponent)

    def test_unknown_section_warns(self):
        config = configparser.ConfigParser()
        config.read_string("[input]\nimage = lena.pgm\n[plots]\ndpi = 300\n")
        options = self.parser.parse_args(["encrypt"])
        with self.assertLogs("setup.prog_config", level="WARNING") as logs:
            apply_file_config(config, options)
        self.assertEqual(len(logs.output), 2)
        self.assertIsNone(options.image)

    def test_write_then_read(self):
        options = self.parser.parse_args(["transmit", "--image", "lena.pgm", "--n0", "500", "--snr-grid", "5",
                                          "20", "--dump-samples"])
        filename = write_file_config(options, self.config_dir)
        self.assertEqual(filename, os.path.join(self.config_dir, "chaoslink"))
        config = read_file_config(None, self.config_dir)
        self.assertFalse(config.has_section("input"))
        fresh = self.parser.parse_args(["transmit"])
        apply_file_config(config, fresh)
        self.assertEqual(fresh.n0, 500)
        self.assertEqual(fresh.snr_grid, (5.0, 20.0))
        self.assertTrue(fresh.dump_samples)

    def test_write_file_no_config_dir(self):
        os.mkdir(os.path.join(self.config_dir, ".config"))
        options = self.parser.parse_args(["encrypt", "--rounds", "6"])
        with mock.patch.dict('os.environ', {"HOME": self.config_dir}):
            filename = write_file_config(options)
        self.assertTrue(os.path.isfile(filename))

    def test_format_option(self):
        self.assertEqual(format_option(None), "")
        self.assertEqual(format_option(True), "true")
        self.assertEqual(format_option(0.1), "0.1")
        self.assertEqual(format_option((5, 10.5)), "5.0, 10.5")
        self.assertEqual(format_option(12), "12")

    def test_parse_option(self):
        self.assertEqual(parse_option("rounds", " 4 "), 4)
        self.assertEqual(parse_option("snr_db", "inf"), float("inf"))
        self.assertEqual(parse_option("snr_grid", "5 10,20"), (5.0, 10.0, 20.0))
        self.assertFalse(parse_option("literal_key", "off"))
        self.assertIsNone(parse_option("image", ""))
        with self.assertRaises(ConfigurationError):
            parse_option("rounds", "four")
        with self.assertRaises(ConfigurationError):
            parse_option("colour", "red")
        with self.assertRaises(ConfigurationError):
            parse_option("dump_samples", "maybe")
