import { ApiClient } from "./api";
import { Dashboard } from "./app";
import "./styles.css";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

new Dashboard(root, new ApiClient());
