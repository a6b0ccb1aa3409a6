"""
JSON readers and writers for complexes, simplicial maps and block complexes
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

from src.block_complex import Block, BlockComplex, validate_block_complex
from src.errors import ComplexError, ComplexFormatError
from src.simplicial_complex import SimplicialComplex
from src.simplicial_maps import SimplicialMap

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _parse(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexFormatError(e.msg, f"{source}:{e.lineno}:{e.colno}") from e


def _read(path: PathLike) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ComplexFormatError(f"Cannot read file: {e.strerror or e}", str(path)) from e
    return _parse(text, str(path))


def _require_object(data: Any, location: str) -> Dict[str, Any]:
    if not isinstance(data, dict):
        raise ComplexFormatError(f"expected a JSON object, got {type(data).__name__}", location)
    return data


def _labels(value: Any, location: str) -> List[str]:
    if not isinstance(value, list):
        raise ComplexFormatError(f"expected a list of vertex labels, got {type(value).__name__}", location)
    labels = []
    for i, label in enumerate(value):
        if isinstance(label, bool) or not isinstance(label, (str, int)):
            raise ComplexFormatError(f"vertex labels must be strings or integers, got {label!r}",
                                     f"{location}[{i}]")
        labels.append(str(label))
    return labels


# -- complexes ----------------------------------------------------------------------

def complex_from_dict(data: Any, source: str = "<complex>") -> SimplicialComplex:
    """{"vertices": [...], "facets": [[...], ...]}; without "vertices" the order of first appearance is used"""
    data = _require_object(data, source)
    if "facets" not in data:
        raise ComplexFormatError("missing key 'facets'", source)
    raw_facets = data["facets"]
    if not isinstance(raw_facets, list):
        raise ComplexFormatError("'facets' must be a list", f"{source}.facets")
    facets = [_labels(f, f"{source}.facets[{i}]") for i, f in enumerate(raw_facets)]

    if "vertices" in data:
        vertices = _labels(data["vertices"], f"{source}.vertices")
    else:
        vertices = list(dict.fromkeys(v for facet in facets for v in facet))

    try:
        return SimplicialComplex.from_facets(vertices, facets)
    except ComplexError as e:
        raise ComplexFormatError(str(e), source) from e


def complex_from_json(text: str, source: str = "<complex>") -> SimplicialComplex:
    return complex_from_dict(_parse(text, source), source)


def load_complex(path: PathLike) -> SimplicialComplex:
    K = complex_from_dict(_read(path), str(path))
    logger.info(f"📂 Loaded {path}: {len(K.vertices)} vertices, {K.n_faces} faces, dim {K.dim}")
    return K


def dump_complex(K: SimplicialComplex) -> str:
    return json.dumps(K.to_dict(), indent=2)


def save_complex(K: SimplicialComplex, path: PathLike):
    Path(path).write_text(dump_complex(K) + "\n", encoding="utf-8")
    logger.info(f"💾 Wrote complex to {path}")


# -- simplicial maps ----------------------------------------------------------------

def vertex_map_from_dict(data: Any, source: str = "<map>") -> Dict[str, str]:
    """{"vertex_map": {"v0": "w0", ...}}"""
    data = _require_object(data, source)
    if "vertex_map" not in data:
        raise ComplexFormatError("missing key 'vertex_map'", source)
    raw = _require_object(data["vertex_map"], f"{source}.vertex_map")
    result = {}
    for key, value in raw.items():
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise ComplexFormatError(f"image must be a vertex label, got {value!r}", f"{source}.vertex_map.{key}")
        result[str(key)] = str(value)
    return result


def load_vertex_map(path: PathLike) -> Dict[str, str]:
    return vertex_map_from_dict(_read(path), str(path))


def load_map(path: PathLike, source: SimplicialComplex, target: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(source, target, load_vertex_map(path))


def dump_map(f: SimplicialMap) -> str:
    return json.dumps({"vertex_map": dict(f.vertex_map)}, indent=2)


# -- block complexes ----------------------------------------------------------------

def blocks_from_dict(K: SimplicialComplex, data: Any, source: str = "<blocks>") -> List[Block]:
    """{"blocks": [{"faces": [[...], ...], "positive": [...], "label": "..."}]} over the labels of K"""
    data = _require_object(data, source)
    if "blocks" not in data or not isinstance(data["blocks"], list):
        raise ComplexFormatError("expected a list under 'blocks'", source)

    blocks = []
    for i, entry in enumerate(data["blocks"]):
        where = f"{source}.blocks[{i}]"
        entry = _require_object(entry, where)
        if "faces" not in entry or not isinstance(entry["faces"], list):
            raise ComplexFormatError("expected a list under 'faces'", where)
        positive = _labels(entry["positive"], f"{where}.positive") if "positive" in entry else None
        label = str(entry.get("label", ""))
        try:
            generators = [K.simplex(_labels(face, f"{where}.faces[{j}]")) for j, face in enumerate(entry["faces"])]
            blocks.append(Block.from_faces(K, generators, label=label, positive=positive))
        except ComplexError as e:
            raise ComplexFormatError(str(e), where) from e
    return blocks


def load_block_complex(path: PathLike, K: SimplicialComplex) -> BlockComplex:
    blocks = blocks_from_dict(K, _read(path), str(path))
    logger.info(f"📂 Loaded {len(blocks)} blocks from {path}")
    return validate_block_complex(K, blocks)


def blocks_to_dict(B: BlockComplex) -> Dict[str, Any]:
    return {
        "blocks": [
            {"label": b.label, "faces": [list(f.vertices) for f in b.complex.facets], "positive": list(b.positive)}
            for b in B.blocks
        ]
    }


def dump_json(data: Mapping[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)
