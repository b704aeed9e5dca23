// End-to-end check against a live gateway process:
//  - a multistep command renders the plan card,
//  - Approve triggers execution and the map trail matches streamed poses,
//  - Reject leaves the robot stationary.

import { ChildProcess, spawn } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';
import WebSocket from 'ws';

import { GatewayClient } from '../src/api.js';
import { ConsoleController } from '../src/controller.js';
import type { WebSocketLike } from '../src/events.js';

const PORT = 8765 + Math.floor(Math.random() * 500);
const HTTP = `http://127.0.0.1:${PORT}`;
const WS = `ws://127.0.0.1:${PORT}`;

const MULTISTEP = 'Move forward 2 meters at 0.2 m/s and then turn right 90 degrees.';

let server: ChildProcess;

function wsFactory(url: string): WebSocketLike {
  return new WebSocket(url) as unknown as WebSocketLike;
}

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 120; attempt += 1) {
    try {
      const response = await fetch(`${HTTP}/maps`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error('gateway did not become ready');
}

async function until(predicate: () => boolean, timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    if (predicate()) return;
    await new Promise((resolve) => setTimeout(resolve, 50));
  }
  throw new Error('condition not met in time');
}

beforeAll(async () => {
  server = spawn(
    'python3',
    ['-m', 'babelbot.cli', 'serve', '--host', '127.0.0.1', '--port', String(PORT)],
    { stdio: 'ignore', cwd: new URL('..', import.meta.url).pathname },
  );
  await waitForServer();
}, 60000);

afterAll(() => {
  server?.kill('SIGTERM');
});

describe('console against a live gateway', () => {
  it('renders the plan card, approve executes with a matching trail', async () => {
    const controller = new ConsoleController(new GatewayClient(HTTP), WS, wsFactory);
    let poseEvents = 0;
    let lastTrailLength = 0;
    controller.subscribe((state) => {
      if (state.trail.length > lastTrailLength) {
        poseEvents += state.trail.length - lastTrailLength;
        lastTrailLength = state.trail.length;
      }
    });

    await controller.start('lab');
    expect(controller.mapState?.map.rows.length).toBeGreaterThan(10);
    const spawnPose = { ...controller.state.pose! };
    lastTrailLength = controller.state.trail.length;
    poseEvents = 0;

    await controller.submit(MULTISTEP);
    expect(controller.state.planCard).not.toBeNull();
    expect(controller.state.planCard!.lines).toEqual([
      'Move forward 2 m at 0.2 m/s.',
      'Turn right 90 deg at 30 deg/s.',
    ]);
    // nothing moves while the plan is pending
    expect(controller.state.trail.length).toBe(lastTrailLength);

    await controller.approve();
    expect(controller.state.planCard).toBeNull();
    await until(() => poseEvents > 50 && !controller.state.executing);

    // trail grew exactly by the streamed pose events
    expect(controller.state.trail.length - 1).toBe(poseEvents);
    const finalPose = controller.state.pose!;
    expect(Math.abs(finalPose.x - (spawnPose.x + 2.0))).toBeLessThan(0.2);
    expect(Math.abs(finalPose.y - spawnPose.y)).toBeLessThan(0.2);

    controller.stop();
  }, 60000);

  it('reject leaves the robot stationary', async () => {
    const controller = new ConsoleController(new GatewayClient(HTTP), WS, wsFactory);
    await controller.start('lab');
    const before = { ...controller.state.pose! };

    await controller.submit(MULTISTEP);
    expect(controller.state.planCard).not.toBeNull();
    await controller.reject();
    expect(controller.state.planCard).toBeNull();

    // give any stray execution a moment, then verify the pose is untouched
    await new Promise((resolve) => setTimeout(resolve, 500));
    await controller.refreshState();
    expect(controller.state.pose!.x).toBeCloseTo(before.x, 6);
    expect(controller.state.pose!.y).toBeCloseTo(before.y, 6);
    expect(controller.state.trail.length).toBe(1); // no pose events ever arrived

    controller.stop();
  }, 60000);

  it('language override is reflected in the session', async () => {
    const controller = new ConsoleController(new GatewayClient(HTTP), WS, wsFactory);
    await controller.start('lab');
    await controller.overrideLanguage('fr');
    expect(controller.state.language).toBe('fr');
    expect(controller.state.languageSource).toBe('override');
    await controller.overrideLanguage(null);
    expect(controller.state.languageSource).toBe('detected');
    controller.stop();
  }, 60000);
});
