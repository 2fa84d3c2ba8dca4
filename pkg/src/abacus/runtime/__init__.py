"""Statement evaluation, session state, and output rendering."""

from .registry import COMMANDS, FUNCTIONS, help_text
from .session import Session
from .values import (CHART_REF, ERROR, REPORT_REF, TEXT, UNIT, OutputItem,
                     render_value, value_class)

__all__ = [
    "COMMANDS", "FUNCTIONS", "help_text",
    "Session",
    "CHART_REF", "ERROR", "REPORT_REF", "TEXT", "UNIT", "OutputItem",
    "render_value", "value_class",
]
