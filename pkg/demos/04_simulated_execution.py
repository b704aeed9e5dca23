#!/usr/bin/env python3
"""Drive the simulated robot through a full multilingual session.

Uses the gateway session loop end to end: language detection, the mock
language model, plan parsing, the confirmation gate, twist compilation,
and exact-arc simulation on the bundled lab map.
"""

from babelbot.gateway.config import AppConfig
from babelbot.gateway.session import SessionManager

manager = SessionManager(config=AppConfig(), persist=False)
session = manager.create_session("lab")
print(f"session {session.id}, spawn at {session.sim.state.pose[:2]}\n")


def run(text: str, confirm_with: str | None = None) -> None:
    print(f"> {text}")
    result = manager.submit_command(session.id, text, wait=True)
    print(result.reply_text)
    if result.needs_confirmation:
        reply = confirm_with or manager.lexicon.canonical_positive(result.language)
        print(f"confirm> {reply}")
        print(manager.confirm(session.id, reply, wait=True)["reply_text"])
    manager.wait_idle(session.id)
    if session.last_trace is not None:
        for response in session.last_trace.responses:
            print(f"robot: {response}")
    x, y, theta = session.sim.state.pose
    print(f"pose: ({x:.2f}, {y:.2f}, {theta:.2f} rad)\n")


run("Report your current position and orientation.")
run("Move forward 2 meters at 0.2 m/s and then turn right 90 degrees.")
run("Describe your surroundings.")
run("Geh mit 0,5 m/s in die Küche.")  # German: navigate to the kitchen
run("Проедь по кругу радиусом 1 метр со скоростью 1 м/с.")  # Russian: drive a circle
# reject a multistep plan: the robot must not move
before = session.sim.state.pose
run(
    "Head to the charging station, wait 2 seconds, then return to the start.",
    confirm_with="no, discard the plan",
)
after = session.sim.state.pose
print(f"pose unchanged after rejection: {before == after}")
manager.close_all()
