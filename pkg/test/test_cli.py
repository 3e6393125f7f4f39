# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import contextlib
import filecmp
import io
import os
import shutil
import tempfile
import unittest

from punctkit import cli
from punctkit.corpus_io import MARK_CHARS
from punctkit.corpus_io import read_text_lines
from punctkit.corpus_io import strip_timestamps
from punctkit.corpus_io import write_text_lines
from punctkit.model import LinearModel
from . import synthetic_corpus
from .test_corpus_io import SAMPLE_GOLD
from .test_corpus_io import SAMPLE_IN


class TestCli(unittest.TestCase):

  @classmethod
  def setUpClass(cls):
    cls.tmp_dir = tempfile.mkdtemp()
    cls.train_in = cls.path("train_in.tsv")
    cls.train_expected = cls.path("train_expected.tsv")
    raw, labeled = synthetic_corpus.train_corpus()
    synthetic_corpus.write_corpus(raw, labeled, cls.train_in,
                                  cls.train_expected)
    cls.held_in = cls.path("held_in.tsv")
    cls.held_expected = cls.path("held_expected.tsv")
    cls.held_raw, labeled = synthetic_corpus.held_out_corpus()
    synthetic_corpus.write_corpus(cls.held_raw, labeled, cls.held_in,
                                  cls.held_expected)
    cls.model = cls.path("model.tsv")
    code, _ = cls.run_cli("train", "--data",
                          "{}:{}".format(cls.train_in, cls.train_expected),
                          "--model", cls.model)
    assert code == 0

  @classmethod
  def tearDownClass(cls):
    shutil.rmtree(cls.tmp_dir)

  @classmethod
  def path(cls, name):
    return os.path.join(cls.tmp_dir, name)

  @staticmethod
  def run_cli(*args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
      code = cli.main(list(args))
    return code, out.getvalue()

  def write(self, name, lines):
    path = self.path(name)
    write_text_lines(path, lines)
    return path

  def held_data(self):
    return "{}:{}".format(self.held_in, self.held_expected)

  def test_stats(self):
    in_path = self.write("sample_in.tsv", [SAMPLE_IN])
    expected = self.write("sample_expected.tsv", [SAMPLE_GOLD])
    code, out = self.run_cli("stats", "--data",
                             "{}:{}".format(in_path, expected))
    self.assertEqual(code, 0)
    row = out.strip().split("\n")[-1]
    self.assertTrue(row.startswith("sample_expected.tsv"))
    self.assertIn("15.00", row)
    self.assertIn("200.000", row)
    self.assertIn("66.667", row)

  def test_stats_several_corpora(self):
    code, out = self.run_cli("stats", "--data", self.held_data(), "--data",
                             "{}:{}".format(self.train_in,
                                            self.train_expected))
    self.assertEqual(code, 0)
    self.assertEqual(len(out.strip().split("\n")), 4)
    self.assertIn("200.000", out)

  def test_stats_empty_file(self):
    in_path = self.write("empty_in.tsv", [])
    expected = self.write("empty_expected.tsv", [])
    code, _ = self.run_cli("stats", "--data",
                           "{}:{}".format(in_path, expected))
    self.assertEqual(code, 2)

  def test_malformed_in_file(self):
    in_path = self.write("bad_in.tsv", ["To:1-2", "boli:10170-abc"])
    code, _ = self.run_cli("normalize", "--timestamps", "-i", in_path)
    self.assertEqual(code, 2)

  def test_alignment_error(self):
    in_path = self.write("foo_in.tsv", ["foo:0-1 baz:2-3"])
    expected = self.write("foo_expected.tsv", ["foo bar."])
    code, _ = self.run_cli("align", "--data", "{}:{}".format(in_path, expected))
    self.assertEqual(code, 3)

  def test_align(self):
    in_path = self.write("d_in.tsv", ["Stary:0-1 d:2-3 delegacyjny:4-5"])
    expected = self.write("d_expected.tsv", ["Stary d- delegacyjny"])
    code, out = self.run_cli("align", "--data", "{}:{}".format(in_path, expected))
    self.assertEqual(code, 0)
    self.assertEqual(out.strip().split("\n"),
                     ["Stary\tBLANK", "d\tHYPHEN", "delegacyjny\tBLANK"])

  def test_normalize(self):
    in_path = self.write("gold.txt", [SAMPLE_GOLD, "....."])
    out_path = self.path("normalized.txt")
    code, _ = self.run_cli("normalize", "-i", in_path, "-o", out_path)
    self.assertEqual(code, 0)
    self.assertEqual(read_text_lines(out_path), [
        SAMPLE_GOLD.replace("...", "…"), "….."
    ])

  def test_normalize_timestamps(self):
    in_path = self.write("timed.tsv", [SAMPLE_IN, ""])
    code, out = self.run_cli("normalize", "--timestamps", "-i", in_path)
    self.assertEqual(code, 0)
    self.assertEqual(out.split("\n")[0].split(" ")[7], "pogody")
    self.assertEqual(len(out.split("\n")[0].split(" ")), 15)

  def test_pipeline(self):
    out_path = self.path("held_out.tsv")
    code, _ = self.run_cli("predict", "-i", self.held_in, "-m", self.model,
                           "-o", out_path)
    self.assertEqual(code, 0)
    code, out = self.run_cli("eval", "-e", self.held_expected, "--out",
                             out_path, "-i", self.held_in)
    self.assertEqual(code, 0)
    self.assertIn("Weighted-F1", out)
    kv = dict(l.split("=") for l in out.split("\n") if "=" in l)
    self.assertGreaterEqual(float(kv["weighted_f1"]), 95.0)
    self.assertGreaterEqual(float(kv["fullstop_f1"]), 95.0)

  def test_predict_keeps_words(self):
    out_path = self.path("held_words.tsv")
    code, _ = self.run_cli("predict", "-i", self.held_in, "-m", self.model,
                           "-o", out_path, "--chunk-size", "12", "--overlap",
                           "4")
    self.assertEqual(code, 0)
    predicted = read_text_lines(out_path)
    self.assertEqual(len(predicted), len(self.held_raw))
    for line, doc in zip(predicted, self.held_raw):
      words = "".join(c for c in line if c not in MARK_CHARS).split(" ")
      self.assertEqual(words, [w.text for w in doc.words])

  def test_zero_model(self):
    model = self.path("zero.tsv")
    out_path = self.path("zero_out.tsv")
    self.assertEqual(
        self.run_cli("train", "--data", self.held_data(), "-m", model,
                     "--epochs", "0")[0], 0)
    self.assertEqual(
        self.run_cli("predict", "-i", self.held_in, "-m", model, "-o",
                     out_path)[0], 0)
    self.assertEqual(read_text_lines(out_path),
                     [strip_timestamps(d) for d in self.held_raw])

  def test_deterministic(self):
    outputs = []
    for run in ("a", "b"):
      model = self.path("det_model_{}.tsv".format(run))
      out_path = self.path("det_out_{}.tsv".format(run))
      self.run_cli("train", "--data", self.held_data(), "-m", model,
                   "--epochs", "3", "--seed", "9", "--pauses")
      self.run_cli("predict", "-i", self.held_in, "-m", model, "-o", out_path)
      outputs.append((model, out_path))
    self.assertTrue(filecmp.cmp(outputs[0][0], outputs[1][0], shallow=False))
    self.assertTrue(filecmp.cmp(outputs[0][1], outputs[1][1], shallow=False))

  def test_multi_corpus_train(self):
    model = self.path("multi.tsv")
    code, _ = self.run_cli("train", "--data", self.held_data(), "--data",
                           self.held_data(), "-m", model, "--epochs", "1",
                           "--context-radius", "3", "--pauses",
                           "--pause-buckets", "100,700")
    self.assertEqual(code, 0)
    loaded = LinearModel.load(model)
    self.assertEqual(loaded.context_radius, 3)
    self.assertTrue(loaded.pause_config.enabled)
    self.assertEqual(loaded.pause_config.bucket_edges_ms, (100, 700))

  def test_yaml_config(self):
    config = self.path("config.yaml")
    with io.open(config, "w", encoding="utf-8") as f:
      f.write("epochs: 0\ncontext-radius: 4\n")
    model = self.path("yaml_model.tsv")
    code, _ = self.run_cli("train", "--data", self.held_data(), "-m", model,
                           "--config", config)
    self.assertEqual(code, 0)
    loaded = LinearModel.load(model)
    self.assertEqual(loaded.epochs_trained, 0)
    self.assertEqual(loaded.context_radius, 4)
    code, _ = self.run_cli("train", "--data", self.held_data(), "-m", model,
                           "--config", config, "--epochs", "1")
    self.assertEqual(code, 0)
    self.assertEqual(LinearModel.load(model).epochs_trained, 1)

  def test_eval_line_count_mismatch(self):
    out_path = self.write("short_out.tsv", ["To boli."])
    code, _ = self.run_cli("eval", "-e", self.held_expected, "--out",
                           out_path, "-i", self.held_in)
    self.assertEqual(code, 4)

  def test_bad_config(self):
    code, _ = self.run_cli("predict", "-i", self.held_in, "-m", self.model,
                           "--chunk-size", "10", "--overlap", "5")
    self.assertEqual(code, 1)
    code, _ = self.run_cli("predict", "-i", self.path("missing.tsv"), "-m",
                           self.model)
    self.assertEqual(code, 1)
    code, _ = self.run_cli("train", "--data", "no-colon", "-m",
                           self.path("m.tsv"))
    self.assertEqual(code, 1)

  def test_usage_errors(self):
    with contextlib.redirect_stderr(io.StringIO()):
      code, _ = self.run_cli("predict", "-i", self.held_in, "-m", self.model,
                             "--chunk-size", "abc")
      self.assertEqual(code, 1)
      code, _ = self.run_cli("predict", "-i", self.held_in, "--no-such-flag")
      self.assertEqual(code, 1)
      code, _ = self.run_cli("no-such-command")
      self.assertEqual(code, 1)

  def test_output_over_input(self):
    in_path = self.write("keep_in.tsv", read_text_lines(self.held_in))
    code, _ = self.run_cli("predict", "-i", in_path, "-m", self.model, "-o",
                           in_path)
    self.assertEqual(code, 1)
    self.assertEqual(read_text_lines(in_path), read_text_lines(self.held_in))
    with io.open(self.model, encoding="utf-8") as f:
      before = f.read()
    code, _ = self.run_cli("predict", "-i", self.held_in, "-m", self.model,
                           "-o", self.model)
    self.assertEqual(code, 1)
    with io.open(self.model, encoding="utf-8") as f:
      self.assertEqual(f.read(), before)

  def test_yaml_scalar_data(self):
    config = self.path("scalar_data.yaml")
    with io.open(config, "w", encoding="utf-8") as f:
      f.write("data: {}\nepochs: 1\n".format(self.held_data()))
    model = self.path("scalar_data_model.tsv")
    code, _ = self.run_cli("train", "-m", model, "--config", config)
    self.assertEqual(code, 0)
    self.assertEqual(LinearModel.load(model).epochs_trained, 1)


if __name__ == '__main__':
  unittest.main()
