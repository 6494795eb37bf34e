use std::fs;
use std::path::Path;

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (name, entry) in gabi_cli::corpus::corpus() {
        let path = root.join(&name);
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, entry.to_json()).unwrap();
        println!("{}", path.display());
    }
}
