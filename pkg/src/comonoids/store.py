"""Content-addressed on-disk store for object documents.

Objects live under <root>/objects/<sha256-hex>; names are bindings under
<root>/names/<name> holding the digest.  A name may be rebound to the
same content freely; rebinding to different content requires force.
"""

from __future__ import annotations

import hashlib
import os
import re
from typing import Optional

from .errors import NameCollision, ParseError

_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._+-]*$")
_DIGEST_RE = re.compile(r"^[0-9a-f]{64}$")

STORE_ENV_VAR = "COMONOIDS_STORE"


class Store:
    def __init__(self, root: str):
        self.root = root
        os.makedirs(os.path.join(root, "objects"), exist_ok=True)
        os.makedirs(os.path.join(root, "names"), exist_ok=True)

    def _object_path(self, digest: str) -> str:
        return os.path.join(self.root, "objects", digest)

    def _name_path(self, name: str) -> str:
        if not _NAME_RE.match(name):
            raise ParseError(f"illegal store name {name!r}")
        return os.path.join(self.root, "names", name)

    def put(self, data: bytes, name: Optional[str] = None, force: bool = False) -> str:
        """Store bytes; optionally bind a name.  Returns the digest."""
        digest = hashlib.sha256(data).hexdigest()
        path = self._object_path(digest)
        if not os.path.exists(path):
            with open(path, "wb") as fh:
                fh.write(data)
        if name is not None:
            npath = self._name_path(name)
            if os.path.exists(npath):
                with open(npath, "r", encoding="utf-8") as fh:
                    existing = fh.read().strip()
                if existing != digest and not force:
                    raise NameCollision(
                        f"name {name!r} already bound to different content")
            with open(npath, "w", encoding="utf-8") as fh:
                fh.write(digest + "\n")
        return digest

    def get(self, key: str) -> Optional[bytes]:
        """Fetch by name or by digest; None when absent."""
        if _DIGEST_RE.match(key):
            path = self._object_path(key)
            if os.path.exists(path):
                with open(path, "rb") as fh:
                    return fh.read()
            return None
        npath = os.path.join(self.root, "names", key)
        if os.path.exists(npath):
            with open(npath, "r", encoding="utf-8") as fh:
                digest = fh.read().strip()
            return self.get(digest)
        return None

    def digest_of_name(self, name: str) -> Optional[str]:
        npath = os.path.join(self.root, "names", name)
        if not os.path.exists(npath):
            return None
        with open(npath, "r", encoding="utf-8") as fh:
            return fh.read().strip()

    def list_names(self) -> list:
        names = os.listdir(os.path.join(self.root, "names"))
        return sorted(names)
