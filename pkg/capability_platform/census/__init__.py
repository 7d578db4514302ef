# -*- coding: utf-8 -*-
"""
花束普查与分类验证

使用示例:
    from capability_platform.census import BouquetCensus

    census = BouquetCensus()
    report = census.verify_classification(3, 4)
    print(report.summary())
"""

from .census import BouquetCensus
from .report import ClassificationReport, Violation

__all__ = ['BouquetCensus', 'ClassificationReport', 'Violation']
