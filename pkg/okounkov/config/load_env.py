import os
from dotenv import load_dotenv


def load_environment() -> str | None:
    """
    Loads .env file from one of the standard locations.
    Returns the path that was loaded, or None when no file exists.
    """
    search_paths = [
        os.path.join(os.getcwd(), ".env"),  # where the CLI is invoked from
        os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), ".env"),  # repo root
    ]
    for path in search_paths:
        if os.path.isfile(path):
            load_dotenv(path, override=False)
            return path
    return None
