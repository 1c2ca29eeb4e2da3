import logging
import unittest

from okounkov.config import settings
from okounkov.logging_config import add_run_context, configure_logging


class TestLoggingConfig(unittest.TestCase):
    def tearDown(self):
        configure_logging()

    def test_level_override(self):
        configure_logging("debug")
        self.assertEqual(logging.getLogger().level, logging.DEBUG)
        configure_logging("warning")
        self.assertEqual(logging.getLogger().level, logging.WARNING)

    def test_unknown_level_falls_back_to_info(self):
        configure_logging("loud")
        self.assertEqual(logging.getLogger().level, logging.INFO)

    def test_run_context_keeps_bound_values(self):
        event = add_run_context(None, "info", {"event": "job_started", "version": "pinned"})
        self.assertEqual(event["app"], settings.APP_NAME)
        self.assertEqual(event["version"], "pinned")


if __name__ == "__main__":
    unittest.main()
