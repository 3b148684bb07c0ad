export * from "./protocol.js";
export * from "./scene.js";
export * from "./gestures.js";
export * from "./balance.js";
export * from "./dialog.js";
export * from "./highlight.js";
export * from "./urlparam.js";
export * from "./workbench.js";
export * from "./render.js";
