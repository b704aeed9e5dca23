// Payload shapes of the gateway HTTP/WS API.

export interface Pose {
  x: number;
  y: number;
  theta: number;
}

export interface MapModel {
  resolution: number;
  origin: [number, number];
  rows: string[]; // rows[0] is the top (largest y) row, '#' = occupied
}

export interface SceneObjectInfo {
  label: string;
  x: number;
  y: number;
}

export interface SessionState {
  id: string;
  pose: Pose;
  language: string;
  language_source: 'detected' | 'override';
  executing: boolean;
  pending_plan: string[] | null;
  destinations: string[];
  collided: boolean;
  map: MapModel;
  objects: SceneObjectInfo[];
}

export interface ConfirmPhrases {
  positive: string;
  negative: string;
}

export interface CommandResponse {
  reply_text: string;
  needs_confirmation: boolean;
  language: string;
  plan: string[] | null;
  confirm_phrases: ConfirmPhrases | null;
}

export interface ConfirmResponse {
  executed: boolean;
  reprompt?: boolean;
  reply_text?: string;
}

export interface TelemetryEvent {
  seq: number;
  kind: 'pose' | 'status' | 'message' | 'heartbeat' | string;
  t: number;
  lang?: string;
  pose?: Pose;
  status?: string;
  message?: string;
  action_index?: number | null;
}
