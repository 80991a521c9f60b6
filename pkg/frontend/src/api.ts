// Typed client for the bmgl session service. The UI never re-implements any
// game rule: legality, replies, audits, and outcomes all come from here.

export type BaireMove = number[]

export type SessionConfig = {
  system: string
  horizon: number
  seed: number
  sigma: string
}

export type SessionState = {
  round: number
  horizon: number
  system: string
  sigma: string
  seed: number
  outcome: OutcomePayload | null
}

export type OutcomePayload = {
  outcome: 'NonemptyCertified' | 'Undetermined' | 'IllegalMove'
  witness?: number[]
  horizon?: number
  round?: number
  mover?: string
  reason?: string
}

export type RoundAuditPayload = {
  round: number
  recovered: BaireMove[]
  hats: BaireMove[]
  vs: BaireMove[]
  matches: { history: boolean; hats: boolean; vs: boolean; aux_chain: boolean }
  all_match: boolean
}

export type MoveResponse = {
  v: BaireMove
  audit: RoundAuditPayload | null
  outcome: OutcomePayload | null
  state: SessionState
}

export class ServiceError extends Error {
  status: number
  reason: string

  constructor(status: number, reason: string) {
    super(`service error ${status}: ${reason}`)
    this.status = status
    this.reason = reason
  }
}

async function readReason(response: Response): Promise<string> {
  try {
    const body = await response.json()
    const detail = body?.detail
    if (typeof detail === 'string') return detail
    if (detail && typeof detail.reason === 'string') return detail.reason
  } catch {
    // fall through to the status line
  }
  return response.statusText || 'request failed'
}

export class ServiceClient {
  baseUrl: string

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, '')
  }

  async createSession(config: SessionConfig): Promise<{ id: string; state: SessionState }> {
    const response = await fetch(`${this.baseUrl}/session`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(config),
    })
    if (!response.ok) throw new ServiceError(response.status, await readReason(response))
    return response.json()
  }

  async postMove(sessionId: string, u: BaireMove): Promise<MoveResponse> {
    const response = await fetch(`${this.baseUrl}/session/${sessionId}/move`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ u }),
    })
    if (!response.ok) throw new ServiceError(response.status, await readReason(response))
    return response.json()
  }

  async fetchTranscript(sessionId: string): Promise<string> {
    const response = await fetch(`${this.baseUrl}/session/${sessionId}/transcript`)
    if (!response.ok) throw new ServiceError(response.status, await readReason(response))
    return response.text()
  }
}
