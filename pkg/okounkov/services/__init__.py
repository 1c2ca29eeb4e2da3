# Domain services, one module per toolkit component
