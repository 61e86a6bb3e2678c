#               This file is part of the painleve package.
#
#
#                 Copyright (c) 2026 The painleve developers.
#
#
# SPDX-License-Identifier: AGPL-3.0
#
#  This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.
#

from . import config as config
from . import continuation as continuation
from . import distance as distance
from . import exceptions as exceptions
from . import expression as expression
from . import general_functions as general_functions
from . import local_solver as local_solver
from . import misc as misc
from . import polynomials as polynomials
from . import series as series
from . import symbolic as symbolic
from .config import *
from .continuation import *
from .distance import *
from .exceptions import *
from .expression import *
from .general_functions import *
from .local_solver import *
from .misc import *
from .polynomials import *
from .series import *
from .symbolic import *

__version__ = "0.1.0"
__author__ = "The painleve developers"
