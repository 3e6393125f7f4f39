from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import punctkit.common as common
from punctkit.chunker import make_chunks
from punctkit.chunker import stitch
from punctkit.corpus_io import LabeledDocument


class TaggerRep(object):
  """ A trained model bound to a window layout, ready to label documents. """

  def __init__(self, model=None, chunk_config=None):
    self._model = model
    self._chunk_config = chunk_config

  @property
  def model(self):
    return self._model

  @property
  def chunk_config(self):
    return self._chunk_config

  def predict_window(self, words, timestamps=None):
    """ Label every word of one window, reading no context outside it.

    :param words: Word strings.
    :param timestamps: (start_ms, end_ms) pairs parallel to words, or None.
    :return: List of PunctClass.
    """
    return [
        self._model.predict_label(self._model.features(words, timestamps, p))
        for p in range(len(words))
    ]

  def run(self, doc):
    """ Run TaggerRep on one document.

    :param doc: RawDocument.
    :return: LabeledDocument.
    """
    words = [w.text for w in doc.words]
    stamps = [(w.start_ms, w.end_ms) for w in doc.words]
    chunks = make_chunks(len(words),
                         self._chunk_config.chunk_size,
                         self._chunk_config.overlap,
                         doc_id=doc.doc_id)
    per_chunk = [
        self.predict_window(words[c.begin:c.end], stamps[c.begin:c.end])
        for c in chunks
    ]
    return LabeledDocument(doc.doc_id, words, stitch(chunks, per_chunk))

  def run_all(self, docs):
    labeled = [self.run(doc) for doc in docs]
    common.logger.info("Labeled {} documents.".format(len(labeled)))
    return labeled

  def export_model(self, path):
    """ Export the bound model to a model file.

    :param path: The path to the output model file.
    """
    self._model.save(path)
