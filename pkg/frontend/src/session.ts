// UI session state: a mirror of the service transcript plus composer and
// audit-panel state. All game legality decisions live on the service side;
// this store only records what the service said.

import {
  BaireMove,
  MoveResponse,
  OutcomePayload,
  RoundAuditPayload,
  ServiceClient,
  ServiceError,
  SessionConfig,
} from './api.js'

export type PlayedRound = { n: number; u: BaireMove; v: BaireMove }

export type UiPhase = 'idle' | 'active' | 'done' | 'error'

export type UiSession = {
  phase: UiPhase
  sessionId: string | null
  config: SessionConfig
  rounds: PlayedRound[]
  audits: (RoundAuditPayload | null)[]
  outcome: OutcomePayload | null
  composer: { value: string; error: string | null; enabled: boolean }
  banner: { message: string; retryable: boolean } | null
}

export const defaultConfig: SessionConfig = {
  system: 'baire',
  horizon: 8,
  seed: 0,
  sigma: 'closure0',
}

export function newSession(config: Partial<SessionConfig> = {}): UiSession {
  return {
    phase: 'idle',
    sessionId: null,
    config: { ...defaultConfig, ...config },
    rounds: [],
    audits: [],
    outcome: null,
    composer: { value: '', error: null, enabled: false },
    banner: null,
  }
}

export function validateConfig(config: SessionConfig): string | null {
  if (!Number.isInteger(config.horizon) || config.horizon < 1) {
    return 'horizon must be a positive integer'
  }
  if (!Number.isInteger(config.seed)) return 'seed must be an integer'
  return null
}

export function parseMoveInput(text: string): BaireMove | null {
  const trimmed = text.trim()
  if (trimmed === '') return []
  const parts = trimmed.split(/\s+/)
  const move: number[] = []
  for (const part of parts) {
    if (!/^\d+$/.test(part)) return null
    move.push(Number(part))
  }
  return move
}

export async function startSession(
  client: ServiceClient,
  session: UiSession,
): Promise<UiSession> {
  const validation = validateConfig(session.config)
  if (validation) {
    // no request leaves the client on invalid config
    return {
      ...session,
      composer: { ...session.composer, error: validation },
    }
  }
  try {
    const created = await client.createSession(session.config)
    return {
      ...session,
      phase: 'active',
      sessionId: created.id,
      rounds: [],
      audits: [],
      outcome: null,
      composer: { value: '', error: null, enabled: true },
      banner: null,
    }
  } catch (err) {
    return {
      ...session,
      phase: 'error',
      banner: {
        message: err instanceof Error ? err.message : String(err),
        retryable: true,
      },
    }
  }
}

export async function submitMove(
  client: ServiceClient,
  session: UiSession,
  input: string,
): Promise<UiSession> {
  if (session.phase !== 'active' || !session.sessionId) return session
  const move = parseMoveInput(input)
  if (move === null) {
    return {
      ...session,
      composer: { ...session.composer, value: input, error: 'moves are space-separated naturals' },
    }
  }
  let response: MoveResponse
  try {
    response = await client.postMove(session.sessionId, move)
  } catch (err) {
    if (err instanceof ServiceError && err.status === 400) {
      // rejected move: state unchanged, reason shown next to the composer
      return {
        ...session,
        composer: { ...session.composer, value: input, error: err.reason },
      }
    }
    return {
      ...session,
      phase: 'error',
      banner: {
        message: err instanceof Error ? err.message : String(err),
        retryable: true,
      },
    }
  }
  const n = session.rounds.length
  const rounds = [...session.rounds, { n, u: move, v: response.v }]
  const audits = [...session.audits, response.audit]
  const done = response.outcome !== null
  return {
    ...session,
    phase: done ? 'done' : 'active',
    rounds,
    audits,
    outcome: response.outcome,
    composer: { value: '', error: null, enabled: !done },
  }
}

// The invariant the end-to-end test pins down: the rendered chain is exactly
// the service transcript. These rows are what the tree renders; the test
// deep-equals them against the transcript fetched from the service.
export type TranscriptRow =
  | { n: number; U: BaireMove; V: BaireMove }
  | OutcomePayload

export function renderedRows(session: UiSession): TranscriptRow[] {
  const rows: TranscriptRow[] = session.rounds.map((round) => ({
    n: round.n,
    U: round.u,
    V: round.v,
  }))
  if (session.outcome) rows.push(session.outcome)
  return rows
}
