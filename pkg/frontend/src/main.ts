import "./style.css";
import { BACKEND_URL } from "./config";
import { renderApp } from "./render";
import { AppStore } from "./store";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

renderApp(root, new AppStore({ baseUrl: BACKEND_URL }));
