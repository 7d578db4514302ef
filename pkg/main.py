#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
偏对偶亏格多项式命令行入口

命令: eval, seq, factor, dual, enumerate, search, table, verify-paper

退出码:
    0 成功
    1 verify-paper 存在失败项
    2 输入解析错误 / 边不存在 / 文件错误 / 参数错误
    3 不可定向输入求 ∂Γ
    4 超过普查或直接枚举上限
"""

import sys
import logging
import argparse
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from data_platform.models.errors import (
    RibbonGraphError,
    NonOrientable,
    CapExceeded,
)
from utils.config import load_config
from components.commands import COMMANDS, CommandContext
from components.output import emit

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_NON_ORIENTABLE = 3
EXIT_CAP = 4


def _add_input(parser: argparse.ArgumentParser, allow_graph: bool = True):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--rotation", help='带符号旋转，如 "(a,b,-a,b)"')
    if allow_graph:
        group.add_argument("--graph", help="图文件，每行 \"v<i>: tok tok ...\"")


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"必须为非负整数: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=['text', 'structured'], default='text',
                        help="输出格式")
    common.add_argument("--out", help="输出文件路径（默认标准输出）")
    common.add_argument("--threads", type=int, help="并行进程数（默认取 PD_THREADS 或配置）")
    common.add_argument("--config", help="YAML 配置文件")
    common.add_argument("--log-level", default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help="日志级别")

    parser = argparse.ArgumentParser(description="带状图偏对偶亏格多项式工具")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="计算 ∂ε 或 ∂Γ")
    _add_input(p)
    p.add_argument("--pdg", action="store_true", help="计算偏对偶可定向亏格多项式 ∂Γ")
    p.add_argument("--via-bouquet", action="store_true",
                   help="先沿生成森林偏对偶约化为花束再计算")

    p = sub.add_parser("seq", parents=[common], help="花束的带符号序列")
    _add_input(p)
    p.add_argument("--table", action="store_true", help="附逐边交错数表")

    p = sub.add_parser("factor", parents=[common], help="花束的素分解")
    _add_input(p)

    p = sub.add_parser("dual", parents=[common], help="关于边子集的偏对偶")
    _add_input(p)
    p.add_argument("--subset", default="", help="逗号分隔的边标签")

    p = sub.add_parser("enumerate", parents=[common], help="枚举 n 条边的花束等价类")
    p.add_argument("--edges", type=_non_negative, required=True, help="边数")
    p.add_argument("--prime", action="store_true", help="只保留素类")
    p.add_argument("--orientable", action="store_true", help="只枚举可定向花束")

    p = sub.add_parser("search", parents=[common], help="猜想反例搜索")
    p.add_argument("--conjecture", choices=['3.1', '5.3'], required=True)
    p.add_argument("--max-edges", type=_non_negative, help="最大边数（默认取配置）")

    p = sub.add_parser("table", parents=[common], help="按多项式分组的素类表")
    p.add_argument("--all-edges", type=_non_negative, default=3, help="全部花束的最大边数")
    p.add_argument("--orientable-edges", type=_non_negative, default=4,
                   help="可定向花束的最大边数")

    sub.add_parser("verify-paper", parents=[common], help="运行全部参考结果检查")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        config = load_config(args.config)
        if args.threads is not None:
            config['engine']['threads'] = max(1, args.threads)
        ctx = CommandContext.from_config(config)
        output = COMMANDS[args.command](args, ctx)
        emit(output, args.format, args.out)
        return output.exit_code
    except NonOrientable as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_NON_ORIENTABLE
    except CapExceeded as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CAP
    except (RibbonGraphError, OSError, ValueError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
