// DOM wiring: one active session per tab, all mutations through sequential
// service calls. The store and render models live in session.ts / tree.ts.

import { ServiceClient } from './api.js'
import {
  UiSession,
  defaultConfig,
  newSession,
  startSession,
  submitMove,
} from './session.js'
import { buildTree, formatSeq, renderAudit } from './tree.js'

const params = new URLSearchParams(window.location.search)
const client = new ServiceClient(params.get('service') ?? 'http://127.0.0.1:8421')

let session: UiSession = newSession()
let busy = false

function el(tag: string, className: string, text = ''): HTMLElement {
  const node = document.createElement(tag)
  node.className = className
  if (text) node.textContent = text
  return node
}

function render(): void {
  const root = document.getElementById('app')
  if (!root) return
  root.replaceChildren()

  if (session.banner) {
    const banner = el('div', 'banner error', session.banner.message)
    if (session.banner.retryable) {
      const retry = el('button', 'retry', 'retry') as HTMLButtonElement
      retry.onclick = () => {
        void start()
      }
      banner.appendChild(retry)
    }
    root.appendChild(banner)
  }

  if (session.phase === 'idle' || session.phase === 'error') {
    const form = el('div', 'config')
    const horizon = el('input', 'horizon') as HTMLInputElement
    horizon.type = 'number'
    horizon.value = String(session.config.horizon)
    const seed = el('input', 'seed') as HTMLInputElement
    seed.type = 'number'
    seed.value = String(session.config.seed)
    const button = el('button', 'start', 'start session') as HTMLButtonElement
    button.onclick = () => {
      session = newSession({
        ...defaultConfig,
        horizon: Number(horizon.value),
        seed: Number(seed.value),
      })
      void start()
    }
    form.append('horizon ', horizon, ' seed ', seed, ' ', button)
    root.appendChild(form)
    if (session.composer.error) {
      root.appendChild(el('div', 'composer-error', session.composer.error))
    }
    return
  }

  const status = el(
    'div',
    'status',
    `round ${session.rounds.length} of ${session.config.horizon}`,
  )
  root.appendChild(status)

  const tree = el('ul', 'tree')
  for (const node of buildTree(session)) {
    const item = el(
      'li',
      [
        'node',
        node.kind,
        node.recovered ? 'recovered' : '',
        node.hat ? 'hat' : '',
      ]
        .filter(Boolean)
        .join(' '),
      `${node.label}${node.kind === 'nonempty-reply' ? '  (machine)' : ''}`,
    )
    tree.appendChild(item)
  }
  root.appendChild(tree)

  const auditPanel = el('div', 'audit')
  const view = renderAudit(session, session.rounds.length - 1)
  if (view.kind === 'notice') {
    auditPanel.appendChild(el('div', 'notice', view.message))
  } else if (view.kind === 'failure') {
    auditPanel.appendChild(el('div', 'failure', view.message))
  } else {
    auditPanel.appendChild(
      el(
        'div',
        view.allMatch ? 'match' : 'mismatch',
        `round ${view.round} decode: recovered ${view.recoveredPath.join(' > ')}` +
          (view.allMatch ? ' (all match)' : ' (MISMATCH)'),
      ),
    )
    for (const sibling of view.hatSiblings) {
      auditPanel.appendChild(
        el('div', 'hat-sibling', `hat ${sibling.hat} -> ${sibling.reconstructedReply}`),
      )
    }
  }
  root.appendChild(auditPanel)

  if (session.phase === 'done' && session.outcome) {
    root.appendChild(
      el('div', `outcome ${session.outcome.outcome}`, JSON.stringify(session.outcome)),
    )
    return
  }

  const composer = el('div', 'composer')
  const input = el('input', 'move') as HTMLInputElement
  input.placeholder = 'space-separated naturals, e.g. 3 1 4'
  input.value = session.composer.value
  const button = el('button', 'submit', 'play U') as HTMLButtonElement
  button.disabled = !session.composer.enabled || busy
  button.onclick = () => {
    void play(input.value)
  }
  input.onkeydown = (event) => {
    if (event.key === 'Enter') void play(input.value)
  }
  composer.append(input, button)
  if (session.composer.error) {
    composer.appendChild(el('span', 'composer-error', session.composer.error))
  }
  root.appendChild(composer)
}

async function start(): Promise<void> {
  if (busy) return
  busy = true
  session = await startSession(client, session)
  busy = false
  render()
}

async function play(value: string): Promise<void> {
  if (busy) return
  busy = true
  session = await submitMove(client, session, value)
  busy = false
  render()
}

render()
