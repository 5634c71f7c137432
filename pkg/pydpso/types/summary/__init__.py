__all__ = ["SummaryTable"]


from .summary import SummaryTable
