fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR");
    let out_path = std::path::Path::new(&crate_dir).join("include").join("solq.h");
    std::fs::create_dir_all(out_path.parent().unwrap()).expect("create include dir");

    let mut config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("SOLQ_H".to_string()),
        cpp_compat: true,
        documentation: true,
        ..cbindgen::Config::default()
    };
    config.enumeration.prefix_with_name = true;
    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(&out_path);
        }
        Err(e) => {
            // Header generation failures should not break `cargo build` for
            // Rust-only consumers; surface the problem as a warning.
            println!("cargo:warning=cbindgen failed: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
