// Starts the quiver service once for the whole test run.  The UI has no
// mathematics of its own, so its tests need the real /api/v1 to talk to.

import { spawn, type ChildProcess } from 'node:child_process';
import { API_BASE, API_PORT, CACHE_DIR, REPO_ROOT } from './helpers.js';

let server: ChildProcess | null = null;

async function waitForService(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastErr: unknown = null;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(API_BASE + '/catalog');
      if (resp.ok) return;
    } catch (err) {
      lastErr = err;
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error(
    `quiver service did not come up on port ${API_PORT} ` +
      `(is the Python package installed? try: pip install -e . in the repo root): ${lastErr}`,
  );
}

export default async function setup(): Promise<() => void> {
  server = spawn('quiverlab', ['serve', '--port', String(API_PORT), '--catalog', CACHE_DIR], {
    cwd: REPO_ROOT,
    stdio: 'ignore',
  });
  server.on('error', () => {
    // surfaced by the timeout below with a friendlier message
  });
  await waitForService(30_000);
  return () => {
    server?.kill();
  };
}
