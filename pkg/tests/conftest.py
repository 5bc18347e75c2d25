"""Shared test fixtures: a scriptable local HTTP server.

Every remote interaction in the suite (chat completions, translation,
portal catalog) is served by :class:`FixtureServer` on a loopback port,
so the whole suite runs hermetically with no outside network.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable
from urllib.parse import parse_qs, urlparse

import pytest


@dataclass
class RecordedRequest:
    method: str
    path: str
    query: dict[str, list[str]]
    body: object | None
    headers: dict[str, str] = field(default_factory=dict)


RouteHandler = Callable[[RecordedRequest], tuple[int, object]]


class FixtureServer:
    """Loopback HTTP server whose behavior is a single callable.

    The handler receives each :class:`RecordedRequest` and returns
    ``(status, payload)`` where payload is JSON-serializable (or bytes,
    or None). All requests are recorded for assertions.
    """

    def __init__(self, handler: RouteHandler):
        self.handler = handler
        self.requests: list[RecordedRequest] = []
        self._lock = threading.Lock()

        fixture = self

        class _Handler(BaseHTTPRequestHandler):
            protocol_version = "HTTP/1.1"

            def _serve(self) -> None:
                length = int(self.headers.get("Content-Length", 0))
                raw = self.rfile.read(length) if length else b""
                try:
                    body = json.loads(raw) if raw else None
                except ValueError:
                    body = raw
                parsed = urlparse(self.path)
                request = RecordedRequest(
                    method=self.command,
                    path=parsed.path,
                    query=parse_qs(parsed.query),
                    body=body,
                    headers={k: v for k, v in self.headers.items()},
                )
                with fixture._lock:
                    fixture.requests.append(request)
                status, payload = fixture.handler(request)
                if payload is None:
                    data = b""
                elif isinstance(payload, bytes):
                    data = payload
                else:
                    data = json.dumps(payload).encode("utf-8")
                try:
                    self.send_response(status)
                    self.send_header("Content-Type", "application/json")
                    self.send_header("Content-Length", str(len(data)))
                    self.end_headers()
                    self.wfile.write(data)
                except (BrokenPipeError, ConnectionResetError):
                    pass  # client gave up (timeout tests); nothing to do

            do_GET = _serve
            do_POST = _serve

            def log_message(self, *args) -> None:  # keep test output clean
                pass

        self._server = ThreadingHTTPServer(("127.0.0.1", 0), _Handler)
        self._thread = threading.Thread(
            target=lambda: self._server.serve_forever(poll_interval=0.05), daemon=True
        )

    @property
    def base_url(self) -> str:
        host, port = self._server.server_address[:2]
        return f"http://{host}:{port}"

    def start(self) -> "FixtureServer":
        self._thread.start()
        return self

    def stop(self) -> None:
        self._server.shutdown()
        self._server.server_close()
        self._thread.join(timeout=5)

    def requests_for(self, path_prefix: str) -> list[RecordedRequest]:
        with self._lock:
            return [r for r in self.requests if r.path.startswith(path_prefix)]


@pytest.fixture
def http_server():
    """Factory fixture: start FixtureServers that are torn down after the test."""
    started: list[FixtureServer] = []

    def start(handler: RouteHandler) -> FixtureServer:
        server = FixtureServer(handler).start()
        started.append(server)
        return server

    yield start
    for server in started:
        server.stop()
