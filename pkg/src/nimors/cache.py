"""Networked memoization cache: a TCP key-value server and its client.

Solver workers share computed values through this service.  Keys are
canonical graph forms (1..64 bytes), values are game values (< 2^16).
Values are deterministic, so a put that disagrees with a stored value is
rejected as corruption rather than overwritten.

Wire protocol (framed over a reliable stream):

  request  = u32 big-endian frame length, then the frame:
               'G' u8 keylen key            get
               'P' u8 keylen key u16 value  put (value big-endian)
               'S'                          stats
  response = u32 big-endian frame length, then the frame:
               'H' u16 value                hit
               'M'                          miss
               'O'                          ok (put accepted / repeated)
               'E'                          error (conflict or bad frame)
               'T' 4 x u64                  stats: entries, hits, misses, puts

The optional persistence file is append-only: a 4-byte magic header then
records of (u8 keylen, key, u16 value); a trailing partial record (from
a crash mid-write) is ignored on replay.
"""

from __future__ import annotations

import logging
import os
import socket
import socketserver
import struct
import threading

log = logging.getLogger(__name__)

MAGIC = b"NMC1"
MAX_FRAME = 4096
MAX_KEY = 64
MAX_VALUE = 1 << 16
SHARDS = 16


class ProtocolViolationError(ConnectionError):
    """Peer sent a frame that does not follow the wire protocol."""


class ConnectionLostError(ConnectionError):
    """Transport failed mid-operation."""


class CacheConflictError(RuntimeError):
    """Server refused a put that disagrees with a stored value."""


def _recv_exact(sock: socket.socket, size: int) -> bytes:
    buf = bytearray()
    while len(buf) < size:
        chunk = sock.recv(size - len(buf))
        if not chunk:
            raise ConnectionLostError("socket closed")
        buf.extend(chunk)
    return bytes(buf)


def _send_frame(sock: socket.socket, payload: bytes) -> None:
    sock.sendall(struct.pack(">I", len(payload)) + payload)


class _Store:
    """Sharded map with append-only persistence."""

    def __init__(self, persistence_path: str | None = None):
        self._shards = [dict() for _ in range(SHARDS)]
        self._locks = [threading.Lock() for _ in range(SHARDS)]
        self._stats_lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.puts = 0
        self._log_fd = None
        self._log_lock = threading.Lock()
        if persistence_path:
            self._replay(persistence_path)
            fresh = not os.path.exists(persistence_path)
            self._log_fd = os.open(
                persistence_path, os.O_WRONLY | os.O_CREAT | os.O_APPEND
            )
            if fresh or os.path.getsize(persistence_path) == 0:
                os.write(self._log_fd, MAGIC)

    def _replay(self, path: str) -> None:
        if not os.path.exists(path):
            return
        with open(path, "rb") as handle:
            data = handle.read()
        if data[:4] != MAGIC:
            if data:
                log.warning("persistence file %s lacks magic header; ignoring", path)
            return
        pos = 4
        loaded = 0
        while pos < len(data):
            klen = data[pos]
            end = pos + 1 + klen + 2
            if klen == 0 or klen > MAX_KEY or end > len(data):
                break  # trailing partial or corrupt record
            key = data[pos + 1 : pos + 1 + klen]
            value = struct.unpack(">H", data[pos + 1 + klen : end])[0]
            self._shard(key)[key] = value
            loaded += 1
            pos = end
        log.info("replayed %d entries from %s", loaded, path)

    def _shard(self, key: bytes) -> dict:
        return self._shards[key[0] % SHARDS]

    def get(self, key: bytes) -> int | None:
        shard = self._shard(key)
        idx = key[0] % SHARDS
        with self._locks[idx]:
            value = shard.get(key)
        with self._stats_lock:
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
        return value

    def put(self, key: bytes, value: int) -> bool:
        """Store; False when the key holds a different value already."""
        idx = key[0] % SHARDS
        shard = self._shards[idx]
        with self._locks[idx]:
            existing = shard.get(key)
            if existing is not None:
                ok = existing == value
            else:
                shard[key] = value
                ok = True
                if self._log_fd is not None:
                    record = bytes([len(key)]) + key + struct.pack(">H", value)
                    with self._log_lock:
                        os.write(self._log_fd, record)
        with self._stats_lock:
            self.puts += 1
        return ok

    def stats(self) -> tuple[int, int, int, int]:
        entries = sum(len(s) for s in self._shards)
        with self._stats_lock:
            return entries, self.hits, self.misses, self.puts

    def close(self) -> None:
        if self._log_fd is not None:
            os.close(self._log_fd)
            self._log_fd = None


class _Handler(socketserver.BaseRequestHandler):
    def handle(self) -> None:
        store: _Store = self.server.store  # type: ignore[attr-defined]
        sock = self.request
        while True:
            try:
                header = _recv_exact(sock, 4)
            except ConnectionError:
                return
            (length,) = struct.unpack(">I", header)
            if length == 0 or length > MAX_FRAME:
                self._safe_reply(sock, b"E")
                return  # framing is unrecoverable; drop the connection
            try:
                frame = _recv_exact(sock, length)
            except ConnectionError:
                return
            reply = self._dispatch(store, frame)
            if not self._safe_reply(sock, reply):
                return

    @staticmethod
    def _safe_reply(sock: socket.socket, payload: bytes) -> bool:
        try:
            _send_frame(sock, payload)
            return True
        except OSError:
            return False

    @staticmethod
    def _dispatch(store: _Store, frame: bytes) -> bytes:
        op = frame[:1]
        if op == b"G":
            if len(frame) < 2 or len(frame) != 2 + frame[1] or not 1 <= frame[1] <= MAX_KEY:
                return b"E"
            value = store.get(frame[2:])
            if value is None:
                return b"M"
            return b"H" + struct.pack(">H", value)
        if op == b"P":
            if len(frame) < 2 or len(frame) != 4 + frame[1] or not 1 <= frame[1] <= MAX_KEY:
                return b"E"
            klen = frame[1]
            key = frame[2 : 2 + klen]
            (value,) = struct.unpack(">H", frame[2 + klen :])
            if store.put(key, value):
                return b"O"
            log.error("conflicting put for key %s", key.hex())
            return b"E"
        if op == b"S":
            if len(frame) != 1:
                return b"E"
            return b"T" + struct.pack(">4Q", *store.stats())
        return b"E"


class CacheServer:
    """Threaded TCP cache server; start() returns once it is listening."""

    def __init__(self, host: str = "127.0.0.1", port: int = 0,
                 persistence_path: str | None = None):
        self.store = _Store(persistence_path)

        class _Server(socketserver.ThreadingTCPServer):
            allow_reuse_address = True
            daemon_threads = True

        self._server = _Server((host, port), _Handler)
        self._server.store = self.store  # type: ignore[attr-defined]
        self._thread: threading.Thread | None = None

    @property
    def address(self) -> tuple[str, int]:
        return self._server.server_address[:2]

    def start(self) -> "CacheServer":
        self._thread = threading.Thread(
            target=self._server.serve_forever, daemon=True
        )
        self._thread.start()
        return self

    def serve_forever(self) -> None:
        self._server.serve_forever()

    def shutdown(self) -> None:
        self._server.shutdown()
        self._server.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)
        self.store.close()


class CacheClient:
    """Single-connection client; one worker at a time.

    Raises ConnectionLostError on transport failure so the caller can
    fall back to local-only solving.
    """

    def __init__(self, host: str, port: int, timeout: float = 10.0):
        try:
            self._sock = socket.create_connection((host, port), timeout=timeout)
        except OSError as exc:
            raise ConnectionLostError(f"cannot reach cache at {host}:{port}: {exc}") from exc

    def _roundtrip(self, payload: bytes) -> bytes:
        try:
            _send_frame(self._sock, payload)
            header = _recv_exact(self._sock, 4)
            (length,) = struct.unpack(">I", header)
            if length == 0 or length > MAX_FRAME:
                raise ProtocolViolationError(f"bad response length {length}")
            return _recv_exact(self._sock, length)
        except (OSError, ConnectionError) as exc:
            if isinstance(exc, ProtocolViolationError):
                raise
            raise ConnectionLostError(str(exc)) from exc

    def get(self, key: bytes) -> int | None:
        reply = self._roundtrip(b"G" + bytes([len(key)]) + key)
        if reply[:1] == b"H" and len(reply) == 3:
            return struct.unpack(">H", reply[1:])[0]
        if reply[:1] == b"M":
            return None
        raise ProtocolViolationError(f"unexpected get reply {reply!r}")

    def put(self, key: bytes, value: int) -> None:
        if not 0 <= value < MAX_VALUE:
            raise ValueError("value out of range")
        reply = self._roundtrip(
            b"P" + bytes([len(key)]) + key + struct.pack(">H", value)
        )
        if reply == b"O":
            return
        if reply == b"E":
            raise CacheConflictError("server rejected put")
        raise ProtocolViolationError(f"unexpected put reply {reply!r}")

    def stats(self) -> tuple[int, int, int, int]:
        reply = self._roundtrip(b"S")
        if reply[:1] == b"T" and len(reply) == 33:
            return struct.unpack(">4Q", reply[1:])
        raise ProtocolViolationError(f"unexpected stats reply {reply!r}")

    def close(self) -> None:
        try:
            self._sock.close()
        except OSError:
            pass
