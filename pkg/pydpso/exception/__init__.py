__all__ = [
    "PydpsoError",
    "IncompatibleGenomesError",
    "InvalidGenomeError",
    "InvalidParametersError",
    "UnknownProblemError",
    "UnknownAlgorithmError",
    "ConfigError",
]


class PydpsoError(Exception):
    """Base class for every error raised by pydpso"""

    pass


class IncompatibleGenomesError(PydpsoError):
    """Two genomes of different length were combined or compared"""

    pass


class InvalidGenomeError(PydpsoError):
    """A genome does not fit the problem it is used with"""

    pass


class InvalidParametersError(PydpsoError):
    """A constructor or operator precondition was violated"""

    pass


class UnknownProblemError(PydpsoError):
    """An unknown problem kind or benchmark id was requested"""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__("Unknown problem {!r}".format(name))


class UnknownAlgorithmError(PydpsoError):
    """An unknown algorithm id was requested"""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__("Unknown algorithm {!r}".format(name))


class ConfigError(PydpsoError):
    """An experiment config could not be parsed

    Args:
        message (``str``):
            What is wrong

        section (``str``, *optional*):
            The config section holding the offending field

        field (``str``, *optional*):
            The offending field

        line (``int``, *optional*):
            Line number in the config file, when known

        source (``str``, *optional*):
            File name of the config
    """

    def __init__(
        self,
        message: str,
        section: str = None,
        field: str = None,
        line: int = None,
        source: str = None,
    ) -> None:
        self.message = message
        self.section = section
        self.field = field
        self.line = line
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        location = ""
        if self.source is not None:
            location = self.source + ":"
        if self.line is not None:
            location += "{}:".format(self.line)
        if location:
            location += " "

        where = ""
        if self.section is not None:
            where = "[{}] ".format(self.section)
        if self.field is not None:
            where += "{}: ".format(self.field)

        return location + where + self.message
