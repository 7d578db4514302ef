# -*- coding: utf-8 -*-
"""
components 模块初始化

命令行前端：命令处理器、输出渲染、参考结果检查。
"""
from components.commands import COMMANDS, CommandContext
from components.output import CommandOutput, emit

__all__ = ['COMMANDS', 'CommandContext', 'CommandOutput', 'emit']
