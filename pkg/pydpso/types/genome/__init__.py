__all__ = ["Genome", "ensure_same_length"]


from .genome import Genome, ensure_same_length
