from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import sys
import numpy
import sklearn
import yaml
import punctkit

print("Python version:")
print(sys.version)
print("numpy version:")
print(numpy.__version__)
print("scikit-learn version:")
print(sklearn.__version__)
print("PyYAML version:")
print(yaml.__version__)
print("punctkit version:")
print(punctkit.__version__)
