"""Error type shared by every module.

Each failure carries a short machine-readable ``code`` so the command line
can turn it into a JSON error object without parsing messages.
"""


class Dirac4Error(Exception):
    """Library failure with a stable code and a context mapping.

    Parameters
    ----------
    code : str
        Upper-case identifier such as ``"SINGULAR"`` or ``"SHAPE"``.
    message : str
        Human readable description.
    context : dict, optional
        Extra JSON-serializable details (offending values, thresholds).
    """

    def __init__(self, code, message, context=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.context = dict(context or {})

    def to_dict(self):
        return {"code": self.code, "message": self.message, "context": self.context}
