class DanielewskiError(Exception):
    """Danielewski曲面工具包的基础异常类"""

    @property
    def variant(self) -> str:
        """错误变体名称，命令行输出时使用"""
        return type(self).__name__


class ConfigError(DanielewskiError):
    """配置相关的错误"""
    pass


class ParseError(DanielewskiError):
    """文本语法解析错误"""
    def __init__(self, message, line=None, column=None):
        """
        初始化解析错误

        Args:
            message: 错误消息
            line: 出错的行号（从1开始，可选）
            column: 出错的列号（从1开始，可选）
        """
        self.reason = message
        if line is not None and column is not None:
            message = f"{message} (第{line}行, 第{column}列)"
        super().__init__(message)
        self.line = line
        self.column = column


class ConsistencyError(DanielewskiError):
    """内部交叉校验不一致"""
    pass


class DivisionByZero(DanielewskiError):
    """除数为零"""
    pass


class ZeroDivisorInField(DanielewskiError):
    """求逆时遇到零因子，说明模多项式m(t)可约"""
    def __init__(self, message, factor=None):
        """
        初始化零因子错误

        Args:
            message: 错误消息
            factor: 与m(t)的非平凡公因子（构造性反例）
        """
        super().__init__(message)
        self.factor = factor


class NotDivisible(DanielewskiError):
    """多项式不能整除"""
    def __init__(self, message, remainder=None):
        """
        初始化不能整除错误

        Args:
            message: 错误消息
            remainder: 除法余项（见证）
        """
        super().__init__(message)
        self.remainder = remainder


class NotMonic(DanielewskiError):
    """多项式不是首一的"""
    pass


class NotMonicInZ(NotMonic):
    """多项式关于Z不是首一的"""
    pass


class DegreeTooSmall(DanielewskiError):
    """次数过小（r ≤ 1 或 d ≤ 1）"""
    pass


class WrongVariables(DanielewskiError):
    """多项式包含不允许的变量"""
    pass


class SurfaceMismatch(DanielewskiError):
    """参与运算的元素不属于同一个曲面"""
    pass


class RelationViolated(DanielewskiError):
    """定义关系 f(X)Y - φ(X,Z) 的像不为零"""
    def __init__(self, message, residue=None):
        """
        初始化关系破坏错误

        Args:
            message: 错误消息
            residue: 关系像的标准形（非零）
        """
        super().__init__(message)
        self.residue = residue


class NotAnLND(DanielewskiError):
    """导子不是非零的局部幂零导子"""
    pass


class NotApplicable(DanielewskiError):
    """前提条件不满足，操作不适用"""
    pass


class NotCentered(DanielewskiError):
    """次高项系数不为零，需要先中心化"""
    pass


class NotRootOfUnity(DanielewskiError):
    """参数不是所需的单位根"""
    pass


class PhiDependsOnX(DanielewskiError):
    """φ 含有变量X，不属于 K[Z]"""
    pass


class NotInvertibleRecord(DanielewskiError):
    """态射由原始像构造，没有生成元记录，无法求逆"""
    pass


class ZeroPolynomial(DanielewskiError):
    """输入为零多项式"""
    pass


class ZeroElement(DanielewskiError):
    """输入为零元素"""
    pass
