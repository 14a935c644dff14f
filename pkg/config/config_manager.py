import yaml
import os
import logging
from typing import Dict, Any, Optional

# 引入自定义错误类
from errors import ConfigError

# 幂零指数迭代上限的环境变量
CAP_ENV_VAR = 'DANIELEWSKI_NILPOTENCY_CAP'
DEFAULT_NILPOTENCY_CAP = 64
OUTPUT_FORMATS = ('text', 'json')


class ConfigManager:
    def __init__(self, config_path: str = './conf/config.yaml'):
        self.config_path = config_path
        self._logger = None  # 显式初始化_logger
        self.config = self._load_config()
        self._validate_config()

    @property
    def logger(self):
        """获取logger实例，延迟初始化"""
        if self._logger is None:
            self._logger = logging.getLogger(__name__)
        return self._logger

    def _load_config(self) -> Dict[str, Any]:
        """加载配置文件"""
        # 如果配置文件不存在，则创建默认配置文件
        if not os.path.exists(self.config_path):
            default_config = self._get_default_config()
            self._save_config(default_config)
            self.logger.warning(f"配置文件不存在，已创建默认配置文件: {self.config_path}")
            return default_config

        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f)
            if config is None:
                config = self._get_default_config()
                self._save_config(config)
                self.logger.warning("配置文件为空，已使用默认配置并保存")
                return config
            if not isinstance(config, dict):
                raise ConfigError(f"配置文件顶层必须是映射: {self.config_path}")

            # 补齐缺省的可选项
            defaults = self._get_default_config()
            for section in ('report', 'verify'):
                config.setdefault(section, defaults[section])
            config.setdefault('lnd', {}).setdefault('nilpotency_cap', DEFAULT_NILPOTENCY_CAP)
            config.setdefault('output', {}).setdefault('format', 'text')
            return config
        except ConfigError:
            raise
        except yaml.YAMLError as e:
            self.logger.error(f"配置文件解析错误: {e}")
            raise ConfigError(f"配置文件格式错误: {e}")
        except Exception as e:
            self.logger.error(f"读取配置文件失败: {e}")
            raise ConfigError(f"加载配置失败: {e}")

    def _save_config(self, config: Dict[str, Any]) -> None:
        """保存配置文件"""
        try:
            # 确保目录存在
            os.makedirs(os.path.dirname(os.path.abspath(self.config_path)), exist_ok=True)

            with open(self.config_path, 'w', encoding='utf-8') as f:
                yaml.dump(config, f, allow_unicode=True, default_flow_style=False, indent=2)
        except Exception as e:
            print(f"保存配置文件失败: {e}")  # 使用print而不是logger，避免循环依赖
            raise ConfigError(f"保存配置失败: {e}")

    def _get_default_config(self) -> Dict[str, Any]:
        """获取默认配置"""
        return {
            "surface": {
                "file": "",  # 为空时使用下面的内联定义；相对路径相对于配置文件所在目录
                "modulus": "t",
                "f": "X^2 - 1",
                "phi": "Z^2"
            },
            "lnd": {
                "nilpotency_cap": DEFAULT_NILPOTENCY_CAP
            },
            "output": {
                "format": "text"
            },
            "report": {
                "sample_size": 50,  # 不变量报告中核检验的样本数
                "seed": 0
            },
            "verify": {
                "thread_pool_size": 0,  # 0表示顺序执行，-1表示不限制，>0表示具体线程数
                "seed": 0,
                "trials": {}  # 各套件试验次数的覆盖
            },
            "logging": {
                "level": "WARNING",
                "log_file": "",  # 为空时不写日志文件
                "max_bytes": 10485760,  # 10MB
                "backup_count": 5
            }
        }

    def _validate_config(self) -> None:
        """
        验证配置文件的有效性
        """
        try:
            required_sections = ["surface", "lnd", "output", "logging"]
            for section in required_sections:
                if section not in self.config:
                    raise ConfigError(f"配置文件缺少必要的部分: {section}")

            cap = self.config["lnd"].get("nilpotency_cap")
            if not isinstance(cap, int) or cap < 1:
                raise ConfigError(f"lnd.nilpotency_cap 必须是正整数: {cap}")

            output_format = self.config["output"].get("format")
            if output_format not in OUTPUT_FORMATS:
                raise ConfigError(f"output.format 必须是 {'/'.join(OUTPUT_FORMATS)} 之一: {output_format}")

            pool_size = self.config["verify"].get("thread_pool_size", 0)
            if not isinstance(pool_size, int) or pool_size < -1:
                raise ConfigError(f"verify.thread_pool_size 必须是 ≥ -1 的整数: {pool_size}")

            trials = self.config["verify"].get("trials") or {}
            if not isinstance(trials, dict):
                raise ConfigError("verify.trials 必须是映射")
        except ConfigError:
            raise
        except Exception as e:
            raise ConfigError(f"配置验证失败: {e}")

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置项，支持点号分隔的嵌套键"""
        keys = key.split('.')
        value = self.config

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            self.logger.debug(f"配置项不存在: {key}，使用默认值: {default}")
            return default

    def set(self, key: str, value: Any) -> None:
        """设置配置项，支持点号分隔的嵌套键"""
        keys = key.split('.')
        config = self.config

        try:
            for k in keys[:-1]:
                if k not in config:
                    config[k] = {}
                config = config[k]

            config[keys[-1]] = value

            self._save_config(self.config)
            self.logger.info(f"已更新配置项: {key} = {value}")
        except Exception as e:
            self.logger.error(f"设置配置项失败: {key}, {e}")
            raise ConfigError(f"更新配置失败: {e}")

    def get_surface_config(self) -> Dict[str, Any]:
        """获取曲面配置"""
        return self.config.get("surface", {})

    def get_surface_file(self) -> str:
        """
        曲面规格文件路径，相对路径按配置文件所在目录解析

        Returns:
            文件路径；未配置时为空字符串
        """
        path = self.get_surface_config().get("file") or ""
        if not path or os.path.isabs(path):
            return path
        return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(self.config_path)), path))

    def get_output_format(self) -> str:
        return self.config.get("output", {}).get("format", "text")

    def get_report_config(self) -> Dict[str, Any]:
        """获取不变量报告配置"""
        return self.config.get("report", {})

    def get_verify_config(self) -> Dict[str, Any]:
        """获取性质检验配置"""
        return self.config.get("verify", {})

    def get_logging_config(self) -> Dict[str, Any]:
        """获取日志配置"""
        return self.config.get("logging", {})

    def get_nilpotency_cap(self, override: Optional[int] = None) -> int:
        """
        幂零指数迭代上限

        优先级: 命令行参数 > 环境变量 > 配置文件 > 64

        Args:
            override: 命令行指定的上限（可选）

        Raises:
            ConfigError: 上限不是正整数
        """
        if override is not None:
            cap = override
        elif os.environ.get(CAP_ENV_VAR):
            raw = os.environ[CAP_ENV_VAR]
            try:
                cap = int(raw)
            except ValueError:
                raise ConfigError(f"环境变量 {CAP_ENV_VAR} 必须是整数: {raw}")
        else:
            cap = self.config.get("lnd", {}).get("nilpotency_cap", DEFAULT_NILPOTENCY_CAP)
        if cap < 1:
            raise ConfigError(f"幂零指数迭代上限必须 ≥ 1: {cap}")
        return cap
