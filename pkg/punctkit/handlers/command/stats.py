import os

import punctkit.common as common
from punctkit.common import exception
from punctkit.corpus_io import read_labeled_pair
from punctkit.handlers.command_handler import CommandHandler
from punctkit.handlers.handler import command
from punctkit.handlers.handler import description
from punctkit.stats import compute_stats
from punctkit.stats import format_stats_table


@command("stats")
@description("Profile corpora: samples, mean words per sample and "
             "punctuation marks per 1000 words.")
class Stats(CommandHandler):

  REQUIRED = ("data",)
  INPUTS = ("data",)

  @classmethod
  def add_arguments(cls, parser):
    cls.add_data_argument(
        parser, "In-file and expected-file of one corpus; repeat for one "
        "table row per corpus.")

  @classmethod
  def run(cls, config, **kwargs):
    rows = []
    for in_path, expected_path in config.data:
      docs = read_labeled_pair(in_path, expected_path)
      try:
        stats = compute_stats(docs)
      except exception.EmptyCorpus as e:
        raise e.locate(expected_path)
      common.logger.info("{}: {} samples.".format(expected_path,
                                                 stats.samples))
      rows.append((os.path.basename(expected_path), stats))
    cls.echo(format_stats_table(rows))
