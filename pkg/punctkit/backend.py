"""Backend for labeling transcripts with a trained tagger

Documents longer than one window are labeled window by window and the
central part of every window is kept.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from punctkit.backend_rep import TaggerRep
from punctkit.chunker import ChunkConfig
from punctkit.chunker import DEFAULT_CHUNK_SIZE
from punctkit.chunker import DEFAULT_OVERLAP
from punctkit.chunker import check_chunk_config
from punctkit.corpus_io import align_text_lines
from punctkit.corpus_io import read_text_lines
from punctkit.model import LinearModel
import punctkit.common as common


class TaggerBackend(object):
  """ Tagger Backend for punctuation prediction
  """

  @classmethod
  def prepare(cls,
              model,
              chunk_size=DEFAULT_CHUNK_SIZE,
              overlap=DEFAULT_OVERLAP,
              logging_level=None):
    """Prepare a trained model for labeling.

    :param model: A LinearModel, or the path of a saved model file.
    :param chunk_size: Window length in words used at prediction time.
    :param overlap: Words shared by consecutive windows. With at least twice
      the model context radius, windowed labels equal whole-document labels.
    :param logging_level: The logging level, e.g. INFO, DEBUG or WARNING;
      unchanged when None.

    :returns: A TaggerRep class object bound to the model
    """
    if logging_level is not None:
      common.set_logging_level(logging_level)
    if not isinstance(model, LinearModel):
      model = LinearModel.load(model)
    check_chunk_config(chunk_size, overlap)
    if overlap < 2 * model.context_radius:
      common.logger.warning(
          "Overlap {} is below twice the context radius {}; labels near "
          "window edges may differ from whole-document labels.".format(
              overlap, model.context_radius))
    return TaggerRep(model, ChunkConfig(chunk_size, overlap))

  @classmethod
  def predict(cls, model, doc, chunk_config=None):
    """ Label one RawDocument.

    :param model: LinearModel.
    :param doc: RawDocument.
    :param chunk_config: ChunkConfig, defaults to 100 word windows overlapping
      by 20.
    :return: LabeledDocument.
    """
    chunk_config = chunk_config or ChunkConfig()
    return cls.prepare(model, chunk_config.chunk_size,
                       chunk_config.overlap).run(doc)

  @classmethod
  def load_external_predictions(cls, path, in_docs):
    """ Read another system's punctuated output as labeled documents.

    :param path: Out-file with one punctuated line per document.
    :param in_docs: RawDocuments the lines belong to, in order.
    :return: List of LabeledDocument.
    """
    return align_text_lines(read_text_lines(path), in_docs, path)


prepare = TaggerBackend.prepare
predict = TaggerBackend.predict
load_external_predictions = TaggerBackend.load_external_predictions
