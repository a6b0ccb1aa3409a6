"""
Configuration management for the Simplicial Homeology Toolkit
"""

import os
from dotenv import load_dotenv
from pathlib import Path

from sympy import isprime

from src.errors import ConfigError


def _is_coefficient_spec(text: str) -> bool:
    """Check a coefficient spec string without importing the algebra modules"""
    if text in ("z", "q"):
        return True
    if text.startswith("zp:") and text[3:].isdigit():
        return bool(isprime(int(text[3:])))
    return False


class Config:
    """Toolkit configuration"""

    def __init__(self):
        # Load environment variables
        load_dotenv(override=True)

        # Logging configuration
        self.LOG_LEVEL = os.getenv('HOMEOLOGY_LOG_LEVEL', 'INFO').upper()
        self.LOG_TO_FILE = os.getenv('HOMEOLOGY_LOG_TO_FILE', 'False').lower() == 'true'
        self.LOG_DIR = os.getenv('HOMEOLOGY_LOG_DIR', str(self.get_project_root() / 'logs'))

        # Coefficients used when the CLI is not told otherwise
        self.DEFAULT_COEFFS = os.getenv('HOMEOLOGY_DEFAULT_COEFFS', 'z').lower()

        # Budgets
        self.COMPONENT_FACE_BUDGET = int(os.getenv('HOMEOLOGY_COMPONENT_FACE_BUDGET', '64'))
        self.SUBDIVISION_FACE_BUDGET = int(os.getenv('HOMEOLOGY_SUBDIVISION_FACE_BUDGET', '400'))

        # Self-checks
        self.CHECK_PAGES = os.getenv('HOMEOLOGY_CHECK_PAGES', 'True').lower() == 'true'
        self.CHECK_NORMAL_FORMS = os.getenv('HOMEOLOGY_CHECK_NORMAL_FORMS', 'True').lower() == 'true'

        # Random complexes
        self.RANDOM_DENSITY = float(os.getenv('HOMEOLOGY_RANDOM_DENSITY', '0.5'))

        # Output
        self.OUTPUT_FORMAT = os.getenv('HOMEOLOGY_OUTPUT_FORMAT', 'json').lower()
        self.SUPPORTED_FORMATS = {'json', 'markdown'}

        # Validate settings
        self._validate_config()

    def _validate_config(self):
        """Validate configuration values"""
        if self.COMPONENT_FACE_BUDGET <= 0:
            raise ConfigError("HOMEOLOGY_COMPONENT_FACE_BUDGET must be positive")

        if self.SUBDIVISION_FACE_BUDGET <= 0:
            raise ConfigError("HOMEOLOGY_SUBDIVISION_FACE_BUDGET must be positive")

        if not 0.0 < self.RANDOM_DENSITY <= 1.0:
            raise ConfigError(f"HOMEOLOGY_RANDOM_DENSITY '{self.RANDOM_DENSITY}' must lie in (0, 1]")

        if self.OUTPUT_FORMAT not in self.SUPPORTED_FORMATS:
            raise ConfigError(f"HOMEOLOGY_OUTPUT_FORMAT '{self.OUTPUT_FORMAT}' is not one of {sorted(self.SUPPORTED_FORMATS)}")

        if not _is_coefficient_spec(self.DEFAULT_COEFFS):
            raise ConfigError(f"HOMEOLOGY_DEFAULT_COEFFS '{self.DEFAULT_COEFFS}' must be z, q or zp:<prime>")

    def get_project_root(self) -> Path:
        """Get the project root directory"""
        return Path(__file__).parent.parent

    def get_data_dir(self) -> Path:
        """Get the sample data directory"""
        return self.get_project_root() / 'data'

    def get_log_dir(self) -> Path:
        """Get the log directory"""
        return Path(self.LOG_DIR)


# Global configuration instance
config = Config()
