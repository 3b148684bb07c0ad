// Session URLs: the whole document rides in the `prog` query parameter,
// either as percent-encoded JSON or as "z:" + base64url(deflate). The
// encoder always writes the plain form (a share link stays inspectable);
// the decoder accepts both, inflating through a caller-supplied
// function so the module itself stays runtime-neutral (node:zlib in
// tests, DecompressionStream or a pure-js inflate in a browser).

import { SessionDocument, isSessionDocument } from "./protocol.js";

export const URL_PARAM = "prog";

export type Inflate = (packed: Uint8Array) => Uint8Array;

export function sessionToUrlParam(doc: SessionDocument): string {
  return encodeURIComponent(JSON.stringify(doc));
}

export function sessionToUrl(doc: SessionDocument, base: string): string {
  const sep = base.includes("?") ? "&" : "?";
  return `${base}${sep}${URL_PARAM}=${sessionToUrlParam(doc)}`;
}

// `value` is the still percent-encoded parameter value as it appears in
// the query string.
export function sessionFromUrlParam(
  value: string, inflate?: Inflate,
): SessionDocument {
  let text = decodeURIComponent(value);
  if (text.startsWith("z:")) {
    if (!inflate) {
      throw new Error("compressed session needs an inflate function");
    }
    let packed = text.slice(2).replace(/-/g, "+").replace(/_/g, "/");
    packed += "=".repeat((4 - (packed.length % 4)) % 4);
    const raw = atob(packed);
    const bytes = new Uint8Array(raw.length);
    for (let i = 0; i < raw.length; i++) bytes[i] = raw.charCodeAt(i);
    text = new TextDecoder().decode(inflate(bytes));
  }
  const doc: unknown = JSON.parse(text);
  if (!isSessionDocument(doc)) {
    throw new Error("the prog parameter does not hold a session document");
  }
  return doc;
}

export function sessionFromUrl(
  url: string, inflate?: Inflate,
): SessionDocument {
  const query = url.slice(url.indexOf("?") + 1);
  for (const pair of query.split("&")) {
    const eq = pair.indexOf("=");
    if (eq < 0) continue;
    if (pair.slice(0, eq) === URL_PARAM) {
      return sessionFromUrlParam(pair.slice(eq + 1), inflate);
    }
  }
  throw new Error(`no ${URL_PARAM} parameter in the url`);
}
