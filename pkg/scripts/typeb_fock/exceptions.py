"""
Исключения typeb_fock

Единая иерархия ошибок: библиотека бросает их, CLI превращает в коды выхода
(1 - ошибка данных/использования, 2 - несовпадение при верификации).
"""


class TypeBError(Exception):
    """Базовая ошибка пакета"""


class DimensionMismatchError(TypeBError, ValueError):
    """Размерности векторов, матриц или слов не согласованы"""


class CapExceededError(TypeBError, RuntimeError):
    """Превышен сконфигурированный лимит (n, d^{2n}, длина слова)"""


class PartitionValidationError(TypeBError, ValueError):
    """Вход не является разбиением типа B"""


class PreconditionError(TypeBError, ValueError):
    """Нарушено предусловие операции"""


class NumericalSingularityError(TypeBError, RuntimeError):
    """Вырожденная матрица Грама или разрыв цепной дроби"""


class ProblemFileError(TypeBError, ValueError):
    """Некорректный файл задачи"""
