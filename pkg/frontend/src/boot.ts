// Browser entry point. Kept apart from the controller so tests can import
// the app without side effects.

import { Client, serviceBaseUrl } from "./api.js";
import { initApp } from "./main.js";

const root = document.getElementById("app");
if (root instanceof HTMLElement) {
  void initApp(root, new Client(serviceBaseUrl()));
}
