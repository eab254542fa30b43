# Generated by Django 4.2.16 on 2026-10-17 09:12

from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='GridRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True,
                                           primary_key=True, serialize=False, verbose_name='ID')),
                ('seed', models.IntegerField()),
                ('m', models.IntegerField()),
                ('trials', models.IntegerField()),
                ('variant', models.CharField(max_length=20)),
                ('tol', models.FloatField()),
                ('created', models.DateTimeField(auto_now_add=True)),
            ],
        ),
        migrations.CreateModel(
            name='GridCell',
            fields=[
                ('id', models.BigAutoField(auto_created=True,
                                           primary_key=True, serialize=False, verbose_name='ID')),
                ('embedding', models.CharField(max_length=20)),
                ('r', models.IntegerField()),
                ('rho', models.FloatField()),
                ('epsilon', models.FloatField()),
                ('part', models.CharField(max_length=2)),
                ('successes', models.IntegerField()),
                ('trials', models.IntegerField()),
                ('run', models.ForeignKey(
                    on_delete=django.db.models.deletion.CASCADE, related_name='cells', to='polarpcp.gridrun')),
            ],
            options={
                'ordering': ['embedding', 'r', 'rho', 'epsilon', 'part'],
            },
        ),
    ]
