import sys

from cli import run
from logger import logger


def main() -> int:
    """Точка входа командной строки bilimit."""
    try:
        return run()
    except KeyboardInterrupt:
        logger.info("Вычисление прервано пользователем.")
        return 1


if __name__ == "__main__":
    sys.exit(main())
