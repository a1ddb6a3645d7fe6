"""JSON schemas for every document the command line emits."""

LAURENT_POLY = {
    "type": "object",
    "patternProperties": {"^-?[0-9]+$": {"type": "integer"}},
    "additionalProperties": False,
}

PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 1}}

PATH = {
    "type": "object",
    "properties": {
        "type": {"enum": ["A", "D"]},
        "rank": {"type": "integer", "minimum": 1},
        "letters": {"type": "array", "items": {"type": "integer"}},
    },
    "required": ["type", "rank", "letters"],
    "additionalProperties": False,
}

RIGGED_CONFIGURATION = {
    "type": "object",
    "properties": {
        "type": {"enum": ["A", "D"]},
        "rank": {"type": "integer", "minimum": 1},
        "length": {"type": "integer", "minimum": 0},
        "nu": {"type": "array", "items": PARTITION},
        "riggings": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
    "required": ["type", "rank", "length", "nu", "riggings"],
    "additionalProperties": False,
}

WEIGHT = {"type": "array", "items": {"type": "integer"}}

XM_RESULT = {
    "type": "object",
    "properties": {
        "weight": WEIGHT,
        "x_inverted": LAURENT_POLY,
        "m": LAURENT_POLY,
        "ok": {"type": "boolean"},
    },
    "required": ["weight", "x_inverted", "m", "ok"],
}

BIJECTION_RESULT = {
    "type": "object",
    "properties": {
        "weight": WEIGHT,
        "rc_count": {"type": "integer"},
        "path_count": {"type": "integer"},
        "cardinality": {"type": "boolean"},
        "injective": {"type": "boolean"},
        "statistic": {"type": "boolean"},
        "round_trip": {"type": "boolean"},
        "ok": {"type": "boolean"},
        "failures": {"type": "array", "items": RIGGED_CONFIGURATION},
    },
    "required": ["weight", "rc_count", "path_count", "cardinality", "injective",
                 "statistic", "round_trip", "ok", "failures"],
}

SCHEMAS = {
    "enumerate-paths": {"type": "array", "items": PATH},
    "enumerate-rc": {"type": "array", "items": RIGGED_CONFIGURATION},
    "rc-to-path": PATH,
    "path-to-rc": RIGGED_CONFIGURATION,
    "xxx-psi": RIGGED_CONFIGURATION,
    "xsum": LAURENT_POLY,
    "msum": LAURENT_POLY,
    "verify-xm": {"type": "array", "items": XM_RESULT},
    "verify-bijection": {"type": "array", "items": BIJECTION_RESULT},
    "xxx-count": {"type": "integer", "minimum": 0},
}
