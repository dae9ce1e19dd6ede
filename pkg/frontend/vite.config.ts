import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    // During development the API runs separately (`sda serve`); in production
    // the built app is served same-origin via `sda serve --static dist`.
    proxy: {
      "/api": "http://127.0.0.1:8080",
    },
  },
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
