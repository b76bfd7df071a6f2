# Mark utils as a package for imports in tests.
