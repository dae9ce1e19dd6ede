"""Call the scoring service over HTTP.

The service is a stateless scorer: POST a layout document to /api/measure,
or several named layouts to /api/rank. This script starts the server in a
background thread on a free port, exercises both endpoints and shuts down.
"""

import json
import socket
import threading
import time
import urllib.request

import uvicorn

from sda.service import create_app


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def post(url: str, payload: dict) -> dict:
    request = urllib.request.Request(
        url,
        data=json.dumps(payload).encode(),
        headers={"content-type": "application/json"},
    )
    with urllib.request.urlopen(request) as resp:
        return json.loads(resp.read())


port = free_port()
server = uvicorn.Server(uvicorn.Config(create_app(), host="127.0.0.1", port=port, log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

base = f"http://127.0.0.1:{port}"
centered = {
    "version": 1,
    "frame": {"width": 100, "height": 100},
    "objects": [{"id": "o1", "x": 40, "y": 40, "width": 20, "height": 20}],
}
corner = {
    "version": 1,
    "frame": {"width": 100, "height": 100},
    "objects": [{"id": "o1", "x": 10, "y": 10, "width": 20, "height": 20}],
}

print("measure the centered layout:")
print(" ", post(f"{base}/api/measure", centered))

print("rank centered vs corner:")
ranking = post(f"{base}/api/rank", {
    "layouts": [
        {"id": "centered", "layout": centered},
        {"id": "corner", "layout": corner},
    ]
})
for row in ranking["ranking"]:
    print(f"  #{row['rank']} {row['id']} ({row['aesthetic_value']:.4f})")

server.should_exit = True
thread.join(timeout=5)
print("server stopped")
