import punctkit.common as common
from punctkit.common import exception
from punctkit.corpus_io import align_text_lines
from punctkit.corpus_io import read_in_file
from punctkit.corpus_io import read_text_lines
from punctkit.handlers.command_handler import CommandHandler
from punctkit.handlers.handler import command
from punctkit.handlers.handler import description
from punctkit.trainer import train


@command("train")
@description("Train the tagger on one or more corpora, concatenated in "
             "argument order, and write a model file.")
class Train(CommandHandler):

  REQUIRED = ("data", "model")
  INPUTS = ("data",)
  OUTPUTS = ("model",)

  @classmethod
  def add_arguments(cls, parser):
    cls.add_data_argument(
        parser, "In-file and expected-file of a training corpus; repeat to "
        "train on several corpora.")
    parser.add_argument("--model", "-m", help="Output model file path.")
    common.add_argument_group(parser, "training arguments", [
        (train, {
            "epochs": {
                "type": int
            },
            "seed": {
                "type": int
            },
            "context_radius": {
                "type": int
            },
        }),
    ])
    parser.add_argument("--pauses",
                        action="store_const",
                        const=True,
                        help="Add bucketed pauses between words as features.")
    parser.add_argument("--pause-buckets",
                        dest="pause_buckets",
                        help="Ascending bucket edges in milliseconds, comma "
                        "separated. Default is 100,250,500,1000.")

  @classmethod
  def run(cls, config, **kwargs):
    corpus, timestamps = [], []
    for in_path, expected_path in config.data:
      in_docs = read_in_file(in_path)
      corpus.extend(
          align_text_lines(read_text_lines(expected_path), in_docs,
                           expected_path))
      timestamps.extend([(w.start_ms, w.end_ms)
                         for w in doc.words]
                        for doc in in_docs)
    if not any(doc.words for doc in corpus):
      exception.EMPTY_CORPUS_EXCEPT("for training", "no words")
    model = train(corpus,
                  epochs=config.epochs,
                  seed=config.seed,
                  context_radius=config.context_radius,
                  pause_config=config.pause_config,
                  timestamps=timestamps)
    model.save(config.model)
