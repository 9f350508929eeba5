import os

from dotenv import load_dotenv

load_dotenv()


LOG_LEVEL = os.getenv("BILIMIT_LOG_LEVEL", "ERROR").upper()

# Сколько констант сдвига 0, 1, -1, 2, -2, ... перебирать
SHEAR_SEARCH_LIMIT = int(os.getenv("BILIMIT_SHEAR_SEARCH_LIMIT", 64))

# Сколько делений интервала пополам до символьной проверки на ноль
SIGN_REFINEMENT_LIMIT = int(os.getenv("BILIMIT_SIGN_REFINEMENT_LIMIT", 64))

DECIMAL_DIGITS = int(os.getenv("BILIMIT_DECIMAL_DIGITS", 12))
BENCH_CONCURRENCY = int(os.getenv("BILIMIT_BENCH_CONCURRENCY", 4))
MAX_TRUNCATION = int(os.getenv("BILIMIT_MAX_TRUNCATION", 4096))

if LOG_LEVEL not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
    raise ValueError(f"Неизвестный уровень логирования: {LOG_LEVEL}")
if SHEAR_SEARCH_LIMIT <= 0:
    raise ValueError("BILIMIT_SHEAR_SEARCH_LIMIT должен быть положительным")
if SIGN_REFINEMENT_LIMIT <= 0:
    raise ValueError("BILIMIT_SIGN_REFINEMENT_LIMIT должен быть положительным")
if DECIMAL_DIGITS < 0:
    raise ValueError("BILIMIT_DECIMAL_DIGITS не может быть отрицательным")
if BENCH_CONCURRENCY <= 0:
    raise ValueError("BILIMIT_BENCH_CONCURRENCY должен быть положительным")
if MAX_TRUNCATION < 2:
    raise ValueError("BILIMIT_MAX_TRUNCATION должен быть не меньше 2")
