# Feature modules