import { ExplorerApi } from './api.js';
import { addVertex, removeArrow, removeVertex, setArrow } from './editor.js';
import { ParseError, parseUpload } from './formats.js';
import { layoutPositions, Point } from './layout.js';
import {
  hideBanner,
  renderClassification,
  renderInvariants,
  renderPatterns,
  showBanner,
} from './panels.js';
import { QuiverView } from './render.js';
import { ExplorerSession } from './session.js';
import { builtinSeed } from './seeds.js';
import type { QuiverJson } from './types.js';

// App shell: wires the session to the SVG view and the panels.  The service
// base defaults to same-origin /api/v1 and can be overridden for development
// with ?api=http://localhost:8157/api/v1.

const WIDTH = 900;
const HEIGHT = 640;

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function apiBase(): string {
  const param = new URLSearchParams(window.location.search).get('api');
  return param ?? '/api/v1';
}

function download(filename: string, text: string): void {
  const a = document.createElement('a');
  a.href = URL.createObjectURL(new Blob([text], { type: 'text/plain' }));
  a.download = filename;
  a.click();
  URL.revokeObjectURL(a.href);
}

function main(): void {
  const api = new ExplorerApi(apiBase());
  const session = new ExplorerSession(api);
  const banner = $('banner');
  const uploadDiag = $('upload-diagnostics') as HTMLElement;

  const svg = $('drawing') as unknown as SVGSVGElement;
  svg.setAttribute('viewBox', `0 0 ${WIDTH} ${HEIGHT}`);

  let positions: ReadonlyMap<number, Point> = new Map();
  let lastLoadedJson = '';

  const view = new QuiverView(svg, {
    onVertexClick: (v) => {
      session.clickVertex(v).catch(() => {
        // surfaced through the session error event
      });
    },
    onVertexMoved: (v, p) => {
      const next = new Map(positions);
      next.set(v, p);
      positions = next;
    },
  });

  const redraw = () => {
    if (!session.loaded) return;
    const q = session.current();
    const fresh = session.initialJson() !== lastLoadedJson;
    // same session: keep every vertex where it was so mutations are easy to
    // follow; a new load or an edited vertex set relaxes from scratch
    positions = layoutPositions(q, {
      width: WIDTH,
      height: HEIGHT,
      previous: fresh ? undefined : positions,
    });
    lastLoadedJson = session.initialJson();
    view.update(q, positions);
    view.setHighlight(session.highlight());
    ($('undo') as HTMLButtonElement).disabled = !session.canUndo();
    ($('redo') as HTMLButtonElement).disabled = !session.canRedo();
    $('history-trail').textContent =
      session.vertexSequence().length === 0
        ? 'no mutations yet'
        : 'mutated at: ' + session.vertexSequence().join(', ');
  };

  session.onChange((event) => {
    switch (event) {
      case 'quiver':
        hideBanner(banner);
        redraw();
        break;
      case 'analysis':
        renderInvariants($('invariants'), session.analysis());
        renderPatterns(
          $('patterns'),
          session.analysis(),
          (vs) => session.setHighlight(vs),
          () => session.clearHighlight(),
        );
        break;
      case 'classify':
        renderClassification($('classification'), session.classification());
        break;
      case 'highlight':
        view.setHighlight(session.highlight());
        break;
      case 'error':
        showBanner(banner, session.error(), () => {
          hideBanner(banner);
          if (session.loaded) void session.load(session.current());
        });
        break;
    }
  });

  const loadQuiver = (q: QuiverJson) => {
    uploadDiag.textContent = '';
    renderClassification($('classification'), null);
    session.load(q).catch(() => {});
  };

  // builtin catalog picker, filled from the service so it lists exactly the
  // seeds the server knows
  const picker = $('seed-picker') as HTMLSelectElement;
  api
    .catalog()
    .then((entries) => {
      for (const entry of entries) {
        if (!builtinSeed(entry.name)) continue;
        const opt = document.createElement('option');
        opt.value = entry.name;
        opt.textContent = `${entry.name}  (n=${entry.n})`;
        picker.appendChild(opt);
      }
    })
    .catch((err) => showBanner(banner, err, () => window.location.reload()));
  picker.addEventListener('change', () => {
    const q = builtinSeed(picker.value);
    if (q) loadQuiver(q);
  });

  // file upload in either format, with inline diagnostics on bad input
  const fileInput = $('file-input') as HTMLInputElement;
  fileInput.addEventListener('change', async () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    const text = await file.text();
    try {
      loadQuiver(parseUpload(text));
    } catch (err) {
      uploadDiag.textContent = err instanceof ParseError ? err.message : String(err);
    }
    fileInput.value = '';
  });

  $('undo').addEventListener('click', () => void session.undo());
  $('redo').addEventListener('click', () => void session.redo());
  $('classify').addEventListener('click', () => {
    session.classifyCurrent().catch(() => {});
  });
  $('export-text').addEventListener('click', () => {
    if (session.loaded) download('quiver.txt', session.exportText());
  });
  $('export-json').addEventListener('click', () => {
    if (session.loaded) download('quiver.json', session.exportJson() + '\n');
  });

  // editor: structural edits restart the session on the edited quiver
  const editorApply = (edit: (q: QuiverJson) => QuiverJson) => {
    if (!session.loaded) return;
    try {
      loadQuiver(edit(session.current()));
    } catch (err) {
      uploadDiag.textContent = err instanceof Error ? err.message : String(err);
    }
  };
  $('add-vertex').addEventListener('click', () => editorApply(addVertex));
  $('remove-vertex').addEventListener('click', () => {
    const v = parseInt(($('edit-vertex') as HTMLInputElement).value, 10);
    editorApply((q) => removeVertex(q, v));
  });
  $('add-arrow').addEventListener('click', () => {
    const i = parseInt(($('edit-from') as HTMLInputElement).value, 10);
    const j = parseInt(($('edit-to') as HTMLInputElement).value, 10);
    const w = parseInt(($('edit-weight') as HTMLInputElement).value || '1', 10);
    editorApply((q) => setArrow(q, i, j, w));
  });
  $('remove-arrow').addEventListener('click', () => {
    const i = parseInt(($('edit-from') as HTMLInputElement).value, 10);
    const j = parseInt(($('edit-to') as HTMLInputElement).value, 10);
    editorApply((q) => removeArrow(q, i, j));
  });

  // start on the oriented triangle so the page is alive immediately
  loadQuiver({ n: 3, arrows: [[1, 2, 1], [2, 3, 1], [3, 1, 1]] });
}

main();
