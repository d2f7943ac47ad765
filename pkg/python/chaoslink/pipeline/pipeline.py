import logging
import math
import os

import numpy

from chaoslink.cipher import KeyBundle, decrypt, encrypt
from chaoslink.hyperchaos import (SystemParams, UNIT_STATE, advance, bifurcation_scan, generate_trajectory,
                                  lyapunov_spectrum)
from chaoslink.modem import ber_sweep, derive_seed, psk_ber_approx, snr_to_ebn0_db, transmit_bits
from chaoslink.pipeline.image_files import read_pgm, write_pgm
from chaoslink.pipeline.report_files import (write_ber_sweep, write_bifurcation, write_constellation,
                                             write_histogram, write_lyapunov, write_lyapunov_history,
                                             write_samples, write_suite, write_summary, write_trajectory)
from chaoslink.pipeline.run_manifest import FrameHeader, RunManifest, manifest_path
from chaoslink.randometrics import (SUITE_MINIMUM_LENGTH, bits_from_image, chi_square_uniformity, histogram,
                                    image_from_bits, psnr, run_suite, shannon_entropy, suite_passed)
from chaoslink.setup.log import LoggingLevel
from chaoslink.utilities import (ConfigurationError, DEFAULT_HISTORY_STRIDE, DEFAULT_IMAGE_SIZE,
                                 DEFAULT_SNR_GRID, make_output_dir, output_file)

__all__ = ["COMMANDS", "Pipeline", "snr_label"]

COMMANDS = ("encrypt", "decrypt", "transmit", "ber-sweep", "analyze", "dynamics")

def snr_label(snr_db):
    """str: Short SNR text for file and metric names, e.g. 20 or inf.
    """
    return "{:g}".format(snr_db)

class Pipeline(object):
    """Runs the encrypt, transmit, receive and decrypt chain and its analysis commands.

    Every command reads its inputs, writes its outputs under the configured output directory
    and returns a :class:`.RunManifest` listing them.

    Attributes
    ----------
    config : :class:`.PipelineConfig`
        The resolved settings.
    params : :class:`.SystemParams`
        The hyperchaotic system coefficients.
    db : :class:`.ResultsDatabase` or None
        The run tracking database.
    log : logging.Logger
        The logging instance.
    """

    def __init__(self, config, database=None, params=None):
        """Initialize the class.

        Parameters
        ----------
        config : :class:`.PipelineConfig`
            The resolved settings.
        database : :class:`.ResultsDatabase`, optional
            Results are tracked in this database when given.
        params : :class:`.SystemParams`, optional
            The hyperchaotic system coefficients.
        """
        self.log = logging.getLogger("pipeline.Pipeline")
        self.config = config
        self.params = params if params is not None else SystemParams()
        self.db = database

    def _require(self, name):
        value = getattr(self.config, name)
        if value is None:
            raise ConfigurationError("This command needs --{}".format(name))
        return value

    @staticmethod
    def _stem(filename):
        return os.path.splitext(os.path.basename(filename))[0]

    def _out_dir(self):
        return make_output_dir(self.config.out_dir)

    def run(self, command):
        """Run one command and write its manifest.

        Parameters
        ----------
        command : str
            One of the names in COMMANDS.

        Returns
        -------
        :class:`.RunManifest`
        """
        if command not in COMMANDS:
            raise ConfigurationError("Unknown command {}. Choices are {}.".format(command,
                                                                               ", ".join(COMMANDS)))
        self.log.info("Running {}".format(command))
        manifest = getattr(self, "cmd_{}".format(command.replace("-", "_")))()
        filename = manifest_path(self._out_dir(), command)
        manifest.write(filename)
        missing = manifest.missing_files()
        if missing:
            self.log.warning("Manifest lists missing files: {}".format(", ".join(missing)))
        self.log.info("Finished {}, manifest in {}".format(command, filename))
        return manifest

    @classmethod
    def rerun(cls, filename, database=None):
        """Repeat the run recorded in a manifest file.

        Parameters
        ----------
        filename : str
            The manifest of the earlier run.
        database : :class:`.ResultsDatabase`, optional
            Results are tracked in this database when given.

        Returns
        -------
        :class:`.RunManifest`
            The manifest of the repeated run.
        """
        previous = RunManifest.read(filename)
        logging.getLogger("pipeline.Pipeline").info("Repeating {} from {}".format(previous.command, filename))
        return cls(previous.config, database).run(previous.command)

    def _start_tracking(self, command):
        if self.db is None:
            return None
        return self.db.new_session(command, self.config)

    def cmd_encrypt(self):
        """Encrypt the image and write the cipher image plus its key file.

        Returns
        -------
        :class:`.RunManifest`
        """
        cfg = self.config
        manifest = RunManifest("encrypt", cfg)
        image = read_pgm(self._require("image"))
        bundle = cfg.new_key_bundle()
        cipher = encrypt(image, bundle, self.params, literal_denominator=cfg.literal_key)

        out_dir = self._out_dir()
        stem = self._stem(cfg.image)
        cipher_file = output_file(out_dir, stem, "_cipher.pgm")
        key_file = cfg.key if cfg.key is not None else output_file(out_dir, stem, ".key")
        write_pgm(cipher_file, cipher)
        bundle.write(key_file)
        manifest.add_file("cipher_image", cipher_file)
        manifest.add_file("key", key_file)
        manifest.add_metric("cipher_entropy", shannon_entropy(cipher))
        self._start_tracking("encrypt")
        return manifest

    def cmd_decrypt(self):
        """Decrypt the cipher image with the key file.

        Returns
        -------
        :class:`.RunManifest`
        """
        cfg = self.config
        manifest = RunManifest("decrypt", cfg)
        cipher = read_pgm(self._require("image"))
        bundle = KeyBundle.read(self._require("key"))
        plain = decrypt(cipher, bundle, self.params)

        plain_file = output_file(self._out_dir(), self._stem(cfg.image), "_decrypted.pgm")
        write_pgm(plain_file, plain)
        manifest.add_file("decrypted_image", plain_file)
        if cfg.reference is not None:
            manifest.add_metric("psnr_db", psnr(read_pgm(cfg.reference), plain))
        self._start_tracking("decrypt")
        return manifest

    def _dump_signals(self, manifest, stem, label, signals):
        out_dir = self._out_dir()
        times = self.config.ofdm.sample_times(with_prefix=True)
        outputs = [("tx_constellation", write_constellation, (signals.tx_symbols,)),
                   ("rx_constellation", write_constellation, (signals.rx_symbols,)),
                   ("tx_samples", write_samples, (times, signals.with_prefix)),
                   ("rx_samples", write_samples, (times, signals.received))]
        for name, writer, args in outputs:
            filename = output_file(out_dir, stem, "_snr{}_{}.csv".format(label, name))
            writer(filename, *args)
            manifest.add_file("{}_snr{}".format(name, label), filename)

    def cmd_transmit(self):
        """Send the cipher image over the OFDM link, then decrypt what arrives.

        One received and one reconstructed image is written for each SNR point. The PSNR of a
        reconstruction is measured against the reference image when given, otherwise against
        the decryption of the clean cipher image.

        Returns
        -------
        :class:`.RunManifest`
        """
        cfg = self.config
        manifest = RunManifest("transmit", cfg)
        cipher = read_pgm(self._require("image"))
        bundle = KeyBundle.read(self._require("key"))
        if cfg.reference is not None:
            reference = read_pgm(cfg.reference)
        else:
            reference = decrypt(cipher, bundle, self.params)
        bits = bits_from_image(cipher)
        ofdm = cfg.ofdm
        out_dir = self._out_dir()
        stem = self._stem(cfg.image)
        manifest.add_seed("master", cfg.seed)

        reports = []
        for index, snr in enumerate(cfg.snr_points):
            channel = cfg.channel(index)
            label = snr_label(snr)
            manifest.add_seed("snr{}".format(label), channel.seed)
            result = transmit_bits(bits.bits, ofdm, channel, keep_signals=cfg.dump_samples)
            received = image_from_bits(result.received, cipher.height, cipher.width)
            reconstructed = decrypt(received, bundle, self.params)
            report = result.report.with_psnr(psnr(reference, reconstructed))
            reports.append(report)
            manifest.frame = FrameHeader(cipher.height, cipher.width, len(bits), result.pad_bits)

            received_file = output_file(out_dir, stem, "_snr{}_received.pgm".format(label))
            reconstructed_file = output_file(out_dir, stem, "_snr{}_reconstructed.pgm".format(label))
            write_pgm(received_file, received)
            write_pgm(reconstructed_file, reconstructed)
            manifest.add_file("received_snr{}".format(label), received_file)
            manifest.add_file("reconstructed_snr{}".format(label), reconstructed_file)
            if result.signals is not None:
                self._dump_signals(manifest, stem, label, result.signals)
            self.log.info("SNR {} dB: BER {:.6g}, PSNR {:.4f} dB".format(label, report.ber, report.psnr_db))

        link_file = output_file(out_dir, stem, "_link.csv")
        write_ber_sweep(link_file, reports)
        manifest.add_file("link_report", link_file)
        self._add_link_metrics(manifest, reports)
        session = self._start_tracking("transmit")
        if session is not None:
            self.db.write_link_reports(session, reports)
        return manifest

    def _add_link_metrics(self, manifest, reports, theory=False):
        single = len(reports) == 1
        for report in reports:
            suffix = "" if single else "_snr{}".format(snr_label(report.snr_db))
            manifest.add_metric("ber" + suffix, report.ber)
            if report.psnr_db is not None:
                manifest.add_metric("psnr_db" + suffix, report.psnr_db)
            if theory:
                manifest.add_metric("theory_ber" + suffix, self._theory_ber(report.snr_db))

    def _theory_ber(self, snr_db):
        ofdm = self.config.ofdm
        return float(psk_ber_approx(snr_to_ebn0_db(snr_db, ofdm), ofdm.constellation.order))

    def _sweep_payload(self):
        cfg = self.config
        if cfg.image is None:
            height, width = DEFAULT_IMAGE_SIZE
            self.log.info("No image given, sweeping with {} random bits".format(8 * height * width))
            rng = numpy.random.default_rng(cfg.seed)
            return "random", rng.integers(0, 2, 8 * height * width, dtype=numpy.uint8), None

        image = read_pgm(cfg.image)
        if cfg.key is not None:
            bundle = KeyBundle.read(cfg.key)
            reference = decrypt(image, bundle, self.params)

            def evaluate(received):
                received_image = image_from_bits(received, image.height, image.width)
                return psnr(reference, decrypt(received_image, bundle, self.params))
        else:
            def evaluate(received):
                return psnr(image, image_from_bits(received, image.height, image.width))
        return self._stem(cfg.image), bits_from_image(image).bits, evaluate

    def cmd_ber_sweep(self):
        """Measure the bit error rate over the SNR grid.

        The payload is the image when given, else random bits of a 256x256 image. With a key
        the received image is also decrypted and its PSNR reported.

        Returns
        -------
        :class:`.RunManifest`
        """
        cfg = self.config
        manifest = RunManifest("ber-sweep", cfg)
        stem, payload, evaluate = self._sweep_payload()
        grid = cfg.snr_grid if cfg.snr_grid is not None else DEFAULT_SNR_GRID
        manifest.add_seed("master", cfg.seed)
        for index, snr in enumerate(grid):
            manifest.add_seed("snr{}".format(snr_label(snr)), derive_seed(cfg.seed, index))

        reports = ber_sweep(payload, cfg.ofdm, grid, cfg.seed, evaluate=evaluate, workers=cfg.workers)
        sweep_file = output_file(self._out_dir(), stem, "_ber.csv")
        write_ber_sweep(sweep_file, reports)
        manifest.add_file("ber_sweep", sweep_file)
        self._add_link_metrics(manifest, reports, theory=True)
        session = self._start_tracking("ber-sweep")
        if session is not None:
            self.db.write_link_reports(session, reports)
        return manifest

    def cmd_analyze(self):
        """Write the histogram, the uniformity and entropy summary and the randomness suite of an image.

        Images too small for the randomness suite get the histogram and summary only.

        Returns
        -------
        :class:`.RunManifest`
        """
        cfg = self.config
        manifest = RunManifest("analyze", cfg)
        image = read_pgm(self._require("image"))
        out_dir = self._out_dir()
        stem = self._stem(cfg.image)

        hist = histogram(image)
        chi_square = chi_square_uniformity(hist)
        entropy = shannon_entropy(image)
        hist_file = output_file(out_dir, stem, "_histogram.csv")
        write_histogram(hist_file, hist)
        manifest.add_file("histogram", hist_file)

        summary = [("entropy", entropy), ("chi_square", chi_square.statistic),
                   ("chi_square_p_value", chi_square.p_value)]
        bits = bits_from_image(image)
        results = None
        if len(bits) < SUITE_MINIMUM_LENGTH:
            self.log.warning("{} bits are too few for the randomness suite, it needs {}".format(
                             len(bits), SUITE_MINIMUM_LENGTH))
        else:
            results = run_suite(bits, workers=cfg.workers)
            suite_file = output_file(out_dir, stem, "_nist.csv")
            write_suite(suite_file, results)
            manifest.add_file("nist", suite_file)
            summary.append(("suite_pass", suite_passed(results)))
        if cfg.reference is not None:
            summary.append(("psnr_db", psnr(read_pgm(cfg.reference), image)))

        summary_file = output_file(out_dir, stem, "_summary.csv")
        write_summary(summary_file, dict(summary))
        manifest.add_file("summary", summary_file)
        for name, value in summary:
            manifest.add_metric(name, value)
        self.log.info("Entropy {:.6f} bits/pixel, chi-square {:.3f} (p = {:.4g})".format(
                      entropy, chi_square.statistic, chi_square.p_value))

        session = self._start_tracking("analyze")
        if session is not None and results is not None:
            self.db.write_randomness_results(session, stem, results)
        return manifest

    def cmd_dynamics(self):
        """Write Lyapunov, bifurcation or trajectory data of the hyperchaotic system.

        Returns
        -------
        :class:`.RunManifest`
        """
        cfg = self.config
        manifest = RunManifest("dynamics", cfg)
        out_dir = self._out_dir()
        transient, total, record = cfg.step_counts
        cfg_int = cfg.integrator
        session = self._start_tracking("dynamics")

        if cfg.kind == "lyapunov":
            report = lyapunov_spectrum(UNIT_STATE, self.params, cfg_int, transient, total,
                                       history_stride=DEFAULT_HISTORY_STRIDE)
            exponent_file = output_file(out_dir, "lyapunov", ".csv")
            history_file = output_file(out_dir, "lyapunov", "_history.csv")
            write_lyapunov(exponent_file, report)
            write_lyapunov_history(history_file, report)
            manifest.add_file("lyapunov", exponent_file)
            manifest.add_file("lyapunov_history", history_file)
            for i, value in enumerate(report.exponents):
                manifest.add_metric("l{}".format(i + 1), float(value))
            manifest.add_metric("exponent_sum", float(math.fsum(report.exponents)))
            if session is not None:
                self.db.write_lyapunov_result(session, report)

        elif cfg.kind == "bifurcation":
            scan = bifurcation_scan(cfg.param, cfg.parameter_grid, UNIT_STATE, self.params, cfg_int,
                                    transient, record, workers=cfg.workers)
            scan_file = output_file(out_dir, "bifurcation_", "{}.csv".format(cfg.param))
            write_bifurcation(scan_file, scan)
            manifest.add_file("bifurcation", scan_file)
            manifest.add_metric("grid_points", len(scan.grid))
            manifest.add_metric("diverged_points", sum(scan.diverged))
            manifest.add_metric("maxima", sum(m.size for m in scan.maxima))

        else:
            start = advance(UNIT_STATE, self.params, cfg_int, transient)
            trajectory = generate_trajectory(start, self.params, cfg_int, total)
            trajectory_file = output_file(out_dir, "trajectory", ".csv")
            write_trajectory(trajectory_file, trajectory)
            manifest.add_file("trajectory", trajectory_file)
            manifest.add_metric("steps", total)

        self.log.log(LoggingLevel.WORDY.value, "Dynamics run {} finished".format(cfg.kind))
        return manifest
