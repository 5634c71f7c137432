__all__ = ["ProblemInstance", "Evaluator"]


from .problem import ProblemInstance, Evaluator
