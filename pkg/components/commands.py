# -*- coding: utf-8 -*-
"""
命令处理器

每个 cmd_* 接收 argparse 的 Namespace 和 CommandContext，返回 CommandOutput。
错误以类型化异常抛出，由 main.py 统一映射为退出码。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple, Union

from data_platform.models.base import ConjectureId
from data_platform.models.errors import NonOrientable
from data_platform.models.polynomial import GenusPolynomial
from data_platform.models.rotation import (
    RotationSystem,
    SignedRotation,
    as_rotation_system,
)
from capability_platform.calculators import BouquetCalculator, SurfaceCalculator
from capability_platform.census import BouquetCensus
from capability_platform.engine import EngineConfig, PartialDualEngine
from .output import CommandOutput, classes_frame, frame_text

logger = logging.getLogger(__name__)

RibbonInput = Union[SignedRotation, RotationSystem]


@dataclass
class CommandContext:
    """命令共享的引擎与普查实例"""
    config: Dict
    engine: PartialDualEngine
    census: BouquetCensus

    @classmethod
    def from_config(cls, config: Dict) -> "CommandContext":
        engine = PartialDualEngine(EngineConfig.from_config(config))
        return cls(config=config, engine=engine, census=BouquetCensus.from_config(config, engine))


# ========== 输入 ==========

def load_ribbon(args) -> Tuple[RibbonInput, str]:
    """
    读取 --rotation 或 --graph 输入

    Returns:
        (带状图, 原始输入文本)
    """
    graph = getattr(args, 'graph', None)
    if graph:
        with open(graph, 'r', encoding='utf-8') as f:
            text = f.read()
        return RotationSystem.parse(text), text.strip()
    return SignedRotation.parse(args.rotation), args.rotation


def load_bouquet(args) -> Tuple[SignedRotation, str]:
    r, text = load_ribbon(args)
    if isinstance(r, RotationSystem):
        r = r.to_signed_rotation()
    return r, text


# ========== 命令 ==========

def cmd_eval(args, ctx: CommandContext) -> CommandOutput:
    """∂ε（默认）或 ∂Γ（--pdg）"""
    r, text = load_ribbon(args)
    rs = as_rotation_system(r)
    m = SurfaceCalculator.to_map(rs)
    orientable = SurfaceCalculator.orientable(m)
    if args.pdg and not orientable:
        raise NonOrientable(f"输入含扭转边 {list(rs.twisted_labels())}，不可定向")

    if args.via_bouquet:
        pde = ctx.engine.pde_via_bouquets(rs)
        method = 'via_bouquet'
    else:
        pde = ctx.engine.pde(r)
        method = 'bouquet' if rs.vertex_count == 1 else 'direct'
    poly: GenusPolynomial = pde.halve_exponents() if args.pdg else pde

    return CommandOutput(
        input=text,
        text=poly.format(),
        polynomial=poly,
        meta={
            'kind': 'pdg' if args.pdg else 'pde',
            'method': method,
            'vertices': rs.vertex_count,
            'edges': rs.edge_count,
            'orientable': orientable,
            'interpolating': poly.is_interpolating(),
        },
    )


def cmd_seq(args, ctx: CommandContext) -> CommandOutput:
    """带符号序列；--table 时附逐边交错数表"""
    r, text = load_bouquet(args)
    sequence = BouquetCalculator.signed_sequence(r)
    meta = {'sequence': sequence.format(), 'beta_sum': sequence.beta_sum()}
    lines = [sequence.format()]
    if args.table:
        table = BouquetCalculator.interlace_table(r)
        lines.append(frame_text(table))
        meta['table'] = table.to_dict(orient='records')
    return CommandOutput(input=text, text="\n".join(lines), meta=meta)


def cmd_factor(args, ctx: CommandContext) -> CommandOutput:
    """素因子，每行一个"""
    r, text = load_bouquet(args)
    factors = BouquetCalculator.factor(r)
    return CommandOutput(
        input=text,
        text="\n".join(f.format() for f in factors),
        meta={
            'factors': [f.format() for f in factors],
            'canonical': [BouquetCalculator.canonical(f) for f in factors],
            'prime': len(factors) == 1,
        },
    )


def cmd_dual(args, ctx: CommandContext) -> CommandOutput:
    """关于 --subset 的偏对偶，输出其旋转系统"""
    r, text = load_ribbon(args)
    rs = as_rotation_system(r)
    labels = [s.strip() for s in (args.subset or "").split(',') if s.strip()]
    subset = ctx.engine.subset_of(rs, labels)
    dual = SurfaceCalculator.extract_rotation(
        SurfaceCalculator.partial_dual(SurfaceCalculator.to_map(rs), subset)
    )
    return CommandOutput(
        input=text,
        text=dual.format(),
        meta={
            'subset': labels,
            'vertices': dual.vertex_count,
            'rotation': dual.to_dict()['vertices'],
            'twisted': list(dual.twisted_labels()),
        },
    )


def _listing(text: str, classes, meta: Dict) -> CommandOutput:
    frame = classes_frame(classes)
    body = f"共 {len(classes)} 个类"
    if classes:
        body += "\n" + frame_text(frame)
    meta = dict(meta, count=len(classes), classes=[c.to_dict() for c in classes])
    return CommandOutput(input=text, text=body, meta=meta)


def cmd_enumerate(args, ctx: CommandContext) -> CommandOutput:
    classes = ctx.census.enumerate_bouquets(args.edges, args.orientable, args.prime)
    text = f"enumerate edges={args.edges} prime={args.prime} orientable={args.orientable}"
    return _listing(text, classes, {
        'edges': args.edges, 'prime': args.prime, 'orientable': args.orientable,
    })


def cmd_search(args, ctx: CommandContext) -> CommandOutput:
    conjecture = ConjectureId.from_value(args.conjecture)
    bound = args.max_edges if args.max_edges is not None else ctx.census.search_max_edges
    hits = ctx.census.search(conjecture, bound)
    text = f"search conjecture={conjecture.value} max_edges={bound}"
    return _listing(text, hits, {'conjecture': conjecture.value, 'max_edges': bound})


def cmd_table(args, ctx: CommandContext) -> CommandOutput:
    """按多项式分组的素类表"""
    table = ctx.census.classification_table(args.all_edges, args.orientable_edges)
    return CommandOutput(
        input=f"table all_edges={args.all_edges} orientable_edges={args.orientable_edges}",
        text=frame_text(table),
        meta={'rows': table.to_dict(orient='records')},
    )


def cmd_verify_paper(args, ctx: CommandContext) -> CommandOutput:
    """全部参考结果检查；任一失败退出码为 1"""
    from .reference_checks import run_reference_checks, render_checks

    checks = run_reference_checks(ctx)
    theta_max = int(ctx.config.get('verify', {}).get('theta_max', 10))
    theta = ctx.census.theta_table(theta_max)
    failed = [c for c in checks if not c.passed]
    text = render_checks(checks) + "\n\nΘ_t 表\n" + frame_text(theta)
    logger.info(f"参考检查完成: {len(checks) - len(failed)}/{len(checks)} 通过")
    return CommandOutput(
        input="verify-paper",
        text=text,
        meta={
            'checks': [c.to_dict() for c in checks],
            'theta_table': theta.to_dict(orient='records'),
            'passed': not failed,
        },
        exit_code=1 if failed else 0,
    )


COMMANDS = {
    'eval': cmd_eval,
    'seq': cmd_seq,
    'factor': cmd_factor,
    'dual': cmd_dual,
    'enumerate': cmd_enumerate,
    'search': cmd_search,
    'table': cmd_table,
    'verify-paper': cmd_verify_paper,
}
