// Render models: the played fragment of the Baire tree, and the per-round
// decode-audit panel. Pure functions of the session state, DOM-free.

import { BaireMove, RoundAuditPayload } from './api.js'
import { UiSession } from './session.js'

export type TreeNode = {
  seq: BaireMove
  label: string
  kind: 'root' | 'empty-move' | 'nonempty-reply'
  round: number
  recovered: boolean // highlighted as a decoded ancestor of the latest audit
  hat: boolean // annotated as a reconstructed hat sibling
}

export function formatSeq(seq: BaireMove): string {
  return '[' + seq.join(' ') + ']'
}

function sameSeq(a: BaireMove, b: BaireMove): boolean {
  return a.length === b.length && a.every((x, i) => x === b[i])
}

export function buildTree(session: UiSession): TreeNode[] {
  const latestAudit = [...session.audits].reverse().find((a) => a !== null) ?? null
  const recovered = latestAudit ? latestAudit.recovered : []
  const hats = latestAudit ? latestAudit.hats : []
  const nodes: TreeNode[] = [
    {
      seq: [],
      label: formatSeq([]),
      kind: 'root',
      round: -1,
      recovered: recovered.some((r) => r.length === 0),
      hat: hats.some((h) => h.length === 0),
    },
  ]
  for (const round of session.rounds) {
    nodes.push({
      seq: round.u,
      label: formatSeq(round.u),
      kind: 'empty-move',
      round: round.n,
      recovered: recovered.some((r) => sameSeq(r, round.u)),
      hat: false,
    })
    nodes.push({
      seq: round.v,
      label: formatSeq(round.v),
      kind: 'nonempty-reply',
      round: round.n,
      recovered: false,
      hat: hats.some((h) => sameSeq(h, round.v)),
    })
  }
  return nodes
}

export type AuditView =
  | { kind: 'notice'; message: string }
  | { kind: 'failure'; message: string }
  | {
      kind: 'path'
      round: number
      recoveredPath: string[]
      hatSiblings: { hat: string; reconstructedReply: string }[]
      allMatch: boolean
      matches: RoundAuditPayload['matches']
    }

export function renderAudit(session: UiSession, round: number): AuditView {
  if (round < 2) {
    return { kind: 'notice', message: 'decode begins at round 2' }
  }
  if (round >= session.rounds.length) {
    return { kind: 'notice', message: `round ${round} not played yet` }
  }
  const audit = session.audits[round]
  if (!audit) {
    return {
      kind: 'failure',
      message: `no decode audit arrived for round ${round}`,
    }
  }
  if (audit.recovered.length === 0) {
    return {
      kind: 'failure',
      message: `decode failed at round ${round}: the window was not produced by the coding`,
    }
  }
  return {
    kind: 'path',
    round,
    recoveredPath: audit.recovered.map(formatSeq),
    hatSiblings: audit.hats.map((hat, i) => ({
      hat: formatSeq(hat),
      reconstructedReply: formatSeq(audit.vs[i] ?? []),
    })),
    allMatch: audit.all_match,
    matches: audit.matches,
  }
}
