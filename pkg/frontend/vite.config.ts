import { defineConfig } from "vite";

// The service enables CORS for one configured origin, so during development
// the API can also be reached through this proxy without extra config.
export default defineConfig({
  server: {
    proxy: {
      "/api": "http://localhost:8000",
    },
  },
  build: {
    outDir: "dist",
    sourcemap: true,
  },
});
