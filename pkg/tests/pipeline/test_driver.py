import io
import os
import unittest
from unittest import mock

from chaoslink.cipher import KeyBundle
from chaoslink.database import ResultsDatabase
from chaoslink.pipeline import Pipeline, main, read_pgm

from tests.helpers import make_temp_dir, natural_image, reset_logging, write_image

class DriverTest(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = make_temp_dir(self)
        self.out_dir = os.path.join(self.tmp_dir, "output")
        patcher1 = mock.patch.dict("os.environ", {"HOME": self.tmp_dir})
        self.addCleanup(patcher1.stop)
        patcher1.start()
        self.addCleanup(reset_logging)
        self.image = natural_image(8, 8)
        self.image_file = write_image(self.tmp_dir, "plain.pgm", self.image)

    def main(self, *args):
        return main(list(args) + ["-l", self.tmp_dir, "--out-dir", self.out_dir])

    def test_encrypt_decrypt(self):
        self.assertEqual(self.main("encrypt", "--image", self.image_file, "--rounds", "2"), 0)
        cipher_file = os.path.join(self.out_dir, "plain_cipher.pgm")
        key_file = os.path.join(self.out_dir, "plain.key")
        self.assertEqual(self.main("decrypt", "--image", cipher_file, "--key", key_file), 0)
        self.assertEqual(read_pgm(os.path.join(self.out_dir, "plain_cipher_decrypted.pgm")), self.image)

    def test_log_file_written(self):
        with mock.patch("chaoslink.setup.log.get_hostname", return_value="tester"), \
                mock.patch("chaoslink.setup.log.get_user", return_value="demouser"):
            self.main("encrypt", "--image", self.image_file)
        self.assertTrue(os.path.exists(os.path.join(self.tmp_dir, "tester_demouser_encrypt.log")))

    def test_input_errors(self):
        odd_file = write_image(self.tmp_dir, "odd.pgm", natural_image(8, 9))
        self.assertEqual(self.main("encrypt", "--image", odd_file), 2)
        self.assertEqual(self.main("encrypt", "--image", os.path.join(self.tmp_dir, "missing.pgm")), 2)
        self.assertEqual(self.main("encrypt"), 2)
        self.assertEqual(self.main("transmit", "--image", self.image_file, "--key", self.image_file), 2)
        self.assertEqual(self.main("ber-sweep", "--snr-grid", "10", "5"), 2)

    def test_internal_error(self):
        with mock.patch.object(Pipeline, "run", side_effect=RuntimeError("boom")):
            self.assertEqual(self.main("encrypt", "--image", self.image_file), 1)

    @mock.patch("sys.stderr", new_callable=io.StringIO)
    def test_bad_arguments(self, mock_stderr):
        with self.assertRaises(SystemExit) as context:
            main(["encrypt", "--rounds", "many"])
        self.assertEqual(context.exception.code, 2)

    def test_config_file_precedence(self):
        config_file = os.path.join(self.tmp_dir, "chaoslink.ini")
        with open(config_file, "w") as cfile:
            cfile.write("[cipher]\nrounds = 2\nn0 = 300\n")
        key_file = os.path.join(self.out_dir, "plain.key")
        self.assertEqual(self.main("encrypt", "--image", self.image_file, "--config-file", config_file), 0)
        self.assertEqual((KeyBundle.read(key_file).rounds, KeyBundle.read(key_file).n0), (2, 300))
        self.assertEqual(self.main("encrypt", "--image", self.image_file, "--config-file", config_file,
                                   "--rounds", "3"), 0)
        self.assertEqual((KeyBundle.read(key_file).rounds, KeyBundle.read(key_file).n0), (3, 300))

    def test_default_config_file(self):
        os.mkdir(os.path.join(self.tmp_dir, ".config"))
        with open(os.path.join(self.tmp_dir, ".config", "chaoslink"), "w") as cfile:
            cfile.write("[cipher]\nrounds = 1\n")
        self.assertEqual(self.main("encrypt", "--image", self.image_file), 0)
        self.assertEqual(KeyBundle.read(os.path.join(self.out_dir, "plain.key")).rounds, 1)

    def test_missing_config_file(self):
        self.assertEqual(self.main("encrypt", "--image", self.image_file, "--config-file",
                                   os.path.join(self.tmp_dir, "nothing.ini")), 2)

    def test_rerun(self):
        self.assertEqual(self.main("dynamics", "--kind", "trajectory", "--total", "50"), 0)
        manifest_file = os.path.join(self.out_dir, "dynamics_manifest.ini")
        with open(manifest_file) as mfile:
            text = mfile.read()
        self.assertEqual(main(["rerun", "--manifest", manifest_file, "-l", self.tmp_dir]), 0)
        with open(manifest_file) as mfile:
            self.assertEqual(mfile.read(), text)
        self.assertEqual(main(["rerun", "--manifest", self.image_file, "-l", self.tmp_dir]), 2)

    def test_tracking(self):
        db_file = os.path.join(self.tmp_dir, "tracking.db")
        self.assertEqual(self.main("encrypt", "--image", self.image_file, "-t", "--db-path", db_file), 0)
        database = ResultsDatabase(db_file)
        self.addCleanup(database.engine.dispose)
        self.assertEqual([s["command"] for s in database.fetch("session")], ["encrypt"])
