import { fileURLToPath } from 'node:url';
import type { QuiverJson } from '../src/types.js';

export const API_PORT = 8199;
export const API_BASE = `http://127.0.0.1:${API_PORT}/api/v1`;

export const REPO_ROOT = fileURLToPath(new URL('../..', import.meta.url));
export const CACHE_DIR = fileURLToPath(new URL('../../.quiverlab-cache', import.meta.url));

export const TRIANGLE: QuiverJson = { n: 3, arrows: [[1, 2, 1], [2, 3, 1], [3, 1, 1]] };
