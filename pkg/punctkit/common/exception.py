import inspect
import punctkit.common as common


class PunctError(Exception):
  """ Base class of every error punctkit raises on bad data or flags.

  `path` and `line` are filled in by file readers so the command line can
  report where the problem is.
  """

  exit_code = 1

  def __init__(self, message, path=None, line=None):
    super(PunctError, self).__init__(message)
    self.message = message
    self.path = path
    self.line = line

  def locate(self, path=None, line=None):
    if path is not None and self.path is None:
      self.path = path
    if line is not None and self.line is None:
      self.line = line
    return self

  def __str__(self):
    where = ""
    if self.path is not None:
      where = "{}".format(self.path)
      if self.line is not None:
        where += ":{}".format(self.line)
      where += ": "
    elif self.line is not None:
      where = "line {}: ".format(self.line)
    return where + self.message


class BadConfig(PunctError):
  exit_code = 1


class MalformedField(PunctError):
  exit_code = 2

  def __init__(self, message, index, field, **kwargs):
    super(MalformedField, self).__init__(message, **kwargs)
    self.index = index
    self.field = field


class EmptyCorpus(PunctError):
  exit_code = 2


class ModelFormatError(PunctError):
  exit_code = 2


class AlignmentError(PunctError):
  exit_code = 3

  def __init__(self, message, position, word, token, **kwargs):
    super(AlignmentError, self).__init__(message, **kwargs)
    self.position = position
    self.word = word
    self.token = token


class LengthError(PunctError):
  exit_code = 3

  def __init__(self, message, word_count, token_count, **kwargs):
    super(LengthError, self).__init__(message, **kwargs)
    self.word_count = word_count
    self.token_count = token_count


class IndexOutOfRange(PunctError, IndexError):
  exit_code = 1


class ShapeMismatch(PunctError):
  exit_code = 4


class LineCountMismatch(ShapeMismatch):

  def __init__(self, message, counts, **kwargs):
    super(LineCountMismatch, self).__init__(message, **kwargs)
    self.counts = counts


class CustomException(object):

  def __init__(self):
    self._func = PunctError
    self._message = ""

  def __call__(self, *args, **kwargs):
    if inspect.isclass(self._func) and issubclass(self._func, Exception):
      raise self._func(self.get_message(*args, **kwargs),
                       *self.get_fields(*args, **kwargs))
    elif callable(self._func):
      self._func(self.get_message(*args, **kwargs))

  def get_message(self, *args, **kwargs):
    return self._message

  def get_fields(self, *args, **kwargs):
    return ()


class MalformedFieldException(CustomException):

  def __init__(self):
    super(MalformedFieldException, self).__init__()
    self._func = MalformedField
    self._message = "Malformed field {} `{}`: {}."

  def __call__(self, index, field, reason):
    super(MalformedFieldException, self).__call__(index, field, reason)

  def get_message(self, index, field, reason):
    return self._message.format(index, field, reason)

  def get_fields(self, index, field, reason):
    return (index, field)


class AlignmentException(CustomException):

  def __init__(self):
    super(AlignmentException, self).__init__()
    self._func = AlignmentError
    self._message = "Gold token `{}` does not match word `{}` at position {}."

  def __call__(self, position, word, token):
    super(AlignmentException, self).__call__(position, word, token)

  def get_message(self, position, word, token):
    return self._message.format(token, word, position)

  def get_fields(self, position, word, token):
    return (position, word, token)


class LengthException(CustomException):

  def __init__(self):
    super(LengthException, self).__init__()
    self._func = LengthError
    self._message = "Gold text cannot be reconciled with {} words: {}."

  def __call__(self, word_count, token_count, reason):
    super(LengthException, self).__call__(word_count, token_count, reason)

  def get_message(self, word_count, token_count, reason):
    return self._message.format(word_count, reason)

  def get_fields(self, word_count, token_count, reason):
    return (word_count, token_count)


class ShapeMismatchException(CustomException):

  def __init__(self):
    super(ShapeMismatchException, self).__init__()
    self._func = ShapeMismatch
    self._message = "{} has length {}, expected {}."

  def __call__(self, what, actual, expected):
    super(ShapeMismatchException, self).__call__(what, actual, expected)

  def get_message(self, what, actual, expected):
    return self._message.format(what, actual, expected)


class LineCountMismatchException(CustomException):

  def __init__(self):
    super(LineCountMismatchException, self).__init__()
    self._func = LineCountMismatch
    self._message = "{} has {} lines, expected {}."

  def __call__(self, path, actual, expected):
    super(LineCountMismatchException, self).__call__(path, actual, expected)

  def get_message(self, path, actual, expected):
    return self._message.format(path, actual, expected)

  def get_fields(self, path, actual, expected):
    return ({path: actual},)


class IndexOutOfRangeException(CustomException):

  def __init__(self):
    super(IndexOutOfRangeException, self).__init__()
    self._func = IndexOutOfRange
    self._message = "Position {} is outside a sequence of {} words."

  def __call__(self, position, length):
    super(IndexOutOfRangeException, self).__call__(position, length)

  def get_message(self, position, length):
    return self._message.format(position, length)


class EmptyCorpusException(CustomException):

  def __init__(self):
    super(EmptyCorpusException, self).__init__()
    self._func = EmptyCorpus
    self._message = "Corpus {} is empty."

  def __call__(self, what="", reason=None):
    super(EmptyCorpusException, self).__call__(what, reason)

  def get_message(self, what="", reason=None):
    message = self._message.format(what) if what else "Corpus is empty."
    return message if reason is None else "{} ({})".format(
        message.rstrip("."), reason)


class BadConfigException(CustomException):

  def __init__(self):
    super(BadConfigException, self).__init__()
    self._func = BadConfig
    self._message = "Invalid {} = {}: {}."

  def __call__(self, name, value, reason):
    super(BadConfigException, self).__call__(name, value, reason)

  def get_message(self, name, value, reason):
    return self._message.format(name, value, reason)


class ModelFormatException(CustomException):

  def __init__(self):
    super(ModelFormatException, self).__init__()
    self._func = ModelFormatError
    self._message = "Model file line {}: {}."

  def __call__(self, line, reason):
    super(ModelFormatException, self).__call__(line, reason)

  def get_message(self, line, reason):
    return self._message.format(line, reason)


class DroppedMarkWarning(CustomException):
  """ Soft condition: punctuation that has no word left to carry it. """

  def __init__(self):
    super(DroppedMarkWarning, self).__init__()
    self._func = common.logger.warning
    self._message = "Dropped `{}` after `{}` at position {}: {}."

  def __call__(self, marks, word, position, reason):
    super(DroppedMarkWarning, self).__call__(marks, word, position, reason)

  def get_message(self, marks, word, position, reason):
    return self._message.format(marks, word, position, reason)


MALFORMED_FIELD_EXCEPT = MalformedFieldException()
ALIGNMENT_EXCEPT = AlignmentException()
LENGTH_EXCEPT = LengthException()
SHAPE_MISMATCH_EXCEPT = ShapeMismatchException()
LINE_COUNT_EXCEPT = LineCountMismatchException()
INDEX_EXCEPT = IndexOutOfRangeException()
EMPTY_CORPUS_EXCEPT = EmptyCorpusException()
BAD_CONFIG_EXCEPT = BadConfigException()
MODEL_FORMAT_EXCEPT = ModelFormatException()
DROPPED_MARK_WARN = DroppedMarkWarning()
