__all__ = ["GenerationRecord", "RunResult"]


from .result import GenerationRecord, RunResult
