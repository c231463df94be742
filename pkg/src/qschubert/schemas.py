"""JSON Schemas for the ``--json`` output of each CLI command."""

_SHAPE = {
    "type": "object",
    "properties": {"n": {"type": "integer"}, "k": {"type": "integer"}},
    "required": ["n", "k"],
    "additionalProperties": False,
}

_PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 0}}

_TERMS = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "partition": _PARTITION,
            "q": {"type": "integer", "minimum": 0},
            "coeff": {"type": "integer"},
        },
        "required": ["partition", "q", "coeff"],
        "additionalProperties": False,
    },
}

_MODE = {"enum": ["classical", "quantum"]}

CLASS = {
    "type": "object",
    "properties": {"shape": _SHAPE, "terms": _TERMS},
    "required": ["shape", "terms"],
}

MULT = {
    "type": "object",
    "properties": {
        "shape": _SHAPE,
        "mode": _MODE,
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"expression": {"type": "string"}, "terms": _TERMS},
                "required": ["expression", "terms"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["shape", "mode", "results"],
    "additionalProperties": False,
}

GW = {
    "type": "object",
    "properties": {
        "shape": _SHAPE,
        "insertions": {"type": "array", "items": _PARTITION},
        "degree": {"type": "integer", "minimum": 0},
        "pieri": {"type": "integer"},
        "vi": {"type": "integer"},
        "agree": {"type": "boolean"},
        "note": {"type": "string"},
    },
    "required": ["shape", "insertions", "degree"],
    "additionalProperties": False,
}

VI = {
    "type": "object",
    "properties": {
        "shape": _SHAPE,
        "insertions": {"type": "array", "items": _PARTITION},
        "degree": {"type": "integer", "minimum": 0},
        "value": {"type": "integer"},
        "raw": {
            "type": "object",
            "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
            "required": ["re", "im"],
        },
        "residual": {"type": "number"},
        "note": {"type": "string"},
    },
    "required": ["shape", "insertions", "degree", "value"],
    "additionalProperties": False,
}

TABLE = {
    "type": "object",
    "properties": {
        "shape": _SHAPE,
        "mode": _MODE,
        "products": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"left": _PARTITION, "right": _PARTITION, "terms": _TERMS},
                "required": ["left", "right", "terms"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["shape", "mode", "products"],
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "properties": {
        "shape": _SHAPE,
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
                "required": ["name", "passed", "detail"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["shape", "passed", "checks"],
    "additionalProperties": False,
}

BY_COMMAND = {"mult": MULT, "gw": GW, "vi": VI, "table": TABLE, "verify": VERIFY}
