def render_keyframes(frame_list, out_dir):
    """Render one PNG still per listed frame into out_dir; returns the image paths."""
    import os
    import bpy
    os.makedirs(out_dir, exist_ok=True)
    scene = bpy.context.scene
    scene.render.image_settings.file_format = "PNG"
    paths = []
    for frame in frame_list:
        clamped = max(scene.frame_start, min(int(frame), scene.frame_end))
        if clamped != int(frame):
            print("WARNING: frame %s outside animation range; clamped to %d" % (frame, clamped))
        scene.frame_set(clamped)
        path = os.path.join(out_dir, "frame_%04d.png" % clamped)
        scene.render.filepath = path
        bpy.ops.render.render(write_still=True)
        paths.append(path)
    return paths
