# Copyright 2026 The Polychrome Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Tests for polychrome."""

import types

from absl.testing import absltest
import polychrome
from polychrome._src import test_utils


class PolychromeTest(absltest.TestCase):
  """Test polychrome can be imported correctly."""

  def test_import(self):
    self.assertTrue(hasattr(polychrome, 'peel_pipeline'))

  def test_all_symbols_exist(self):
    for name in polychrome.__all__:
      self.assertTrue(hasattr(polychrome, name), name)

  def test_only_the_root_module_is_public(self):
    modules = test_utils.find_internal_python_modules(polychrome)
    self.assertEqual([name for name, _ in modules], ['polychrome'])

  def test_test_modules_are_not_public(self):
    root = types.ModuleType('pkg')
    root.api = types.ModuleType('pkg.api')
    root.pkg_test = types.ModuleType('pkg.pkg_test')
    root.api.api_test = types.ModuleType('pkg.api_test')
    modules = test_utils.find_internal_python_modules(root)
    self.assertEqual([name for name, _ in modules], ['pkg', 'pkg.api'])


if __name__ == '__main__':
  absltest.main()
