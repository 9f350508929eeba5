import logging
import sys

from config import LOG_LEVEL

# Собственный логгер вычислительного ядра
logger = logging.getLogger("bilimit")
logger.setLevel(LOG_LEVEL)

# Проверяем, есть ли уже обработчики, чтобы не добавлять дубли
if not logger.handlers:
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(LOG_LEVEL)

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    console_handler.setFormatter(formatter)

    logger.addHandler(console_handler)
