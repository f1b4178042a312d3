//! Serve the session API on a local port (default 8080).

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let port = std::env::args().nth(1).and_then(|p| p.parse().ok()).unwrap_or(8080);
    println!("listening on 127.0.0.1:{port}");
    ramsey_core::harness::service::serve(port).await
}
