import logging
import sys

from dotenv import load_dotenv

# Load environment variables before settings are read
load_dotenv()

from commands.cli import run  # noqa: E402
from config import get_settings  # noqa: E402
from core.errors import PidomError  # noqa: E402


class SafeStreamHandler(logging.StreamHandler):
    """stderr handler that degrades vertex names to ASCII on consoles without UTF-8"""

    def __init__(self, stream=None):
        super().__init__(stream if stream is not None else sys.stderr)

    def emit(self, record):
        try:
            message = self.format(record)
            try:
                self.stream.write(message + self.terminator)
            except UnicodeEncodeError:
                self.stream.write(message.encode('ascii', 'replace').decode('ascii') + self.terminator)
            self.flush()
        except Exception:
            self.handleError(record)


def configure_logging():
    """Console logs go to stderr; stdout carries command output only"""
    settings = get_settings()
    handlers = [SafeStreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )


def main() -> int:
    """Entry point"""
    try:
        configure_logging()
    except PidomError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
