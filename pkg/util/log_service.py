import logging
from datetime import datetime
from pathlib import Path

from util.config import get_settings

NOTICE = logging.INFO + 5
logging.addLevelName(NOTICE, "NOTICE")


class LogService:
    def __init__(
        self,
        name: str | None = None,
        level: int | str | None = None,
        log_dir: str | None = None,
    ):
        settings = get_settings()
        name = name or settings.LOGGER_NAME
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level if level is not None else settings.LOG_LEVEL.upper())

        if not self.logger.handlers:
            formatter = logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
            )

            stream_handler = logging.StreamHandler()
            stream_handler.setFormatter(formatter)
            self.logger.addHandler(stream_handler)

            log_dir = log_dir or settings.LOG_DIR
            if log_dir:
                log_path = Path(log_dir)
                log_path.mkdir(parents=True, exist_ok=True)
                timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
                log_file = log_path / f"{name}_{timestamp}.log"
                file_handler = logging.FileHandler(log_file)
                file_handler.setFormatter(formatter)
                self.logger.addHandler(file_handler)

    def info(self, message: str, *args) -> None:
        self.logger.info(message, *args)

    def debug(self, message: str, *args) -> None:
        self.logger.debug(message, *args)

    def warning(self, message: str, *args) -> None:
        self.logger.warning(message, *args)

    def error(self, message: str, *args) -> None:
        self.logger.error(message, *args)

    def exception(self, message: str, *args) -> None:
        self.logger.exception(message, *args)

    def notice(self, message: str, *args) -> None:
        self.logger.log(NOTICE, message, *args)

    def set_level(self, level: int | str) -> None:
        self.logger.setLevel(level)
